/*
 * Copyright 2026 The xailab authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef XAILAB_TEXTIO_HPP_
#define XAILAB_TEXTIO_HPP_

#include <string>
#include <vector>

namespace xailab {

// Shortest round-trip decimal form (via std::to_chars), so emitting the
// same value always produces the same bytes and reloading is lossless.
std::string format_double(double v);

double parse_double(const std::string& s, bool* ok);

std::vector<std::string> split_csv_line(const std::string& line);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace xailab

#endif  // XAILAB_TEXTIO_HPP_
