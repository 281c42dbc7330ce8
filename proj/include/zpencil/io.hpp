/*
 * Copyright 2026 The zpencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ZPENCIL_IO_HPP
#define ZPENCIL_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "zpencil/pencil.hpp"

namespace zpencil {

/// Parses the text pencil format:
///
///     # comment
///     n = 2
///     A:
///     1 2
///     1 0
///     B:
///     2 2
///     1 1
///
/// A row may start on the same line as its "A:" or "B:" header. Input whose
/// first non-blank character is '{' is read as the JSON twin
/// {"n": 2, "A": [[...]], "B": [[...]]}. Errors are Error{Parse} with a
/// "line L, column C:" prefix.
Pencil parse_pencil(std::string_view text);
Pencil parse_pencil_json(std::string_view text);

/// Reads a file and dispatches on content as parse_pencil() does.
Pencil load_pencil(const std::filesystem::path& path);

/// Text format with 17 significant digits, so parse_pencil(format_pencil(p))
/// reproduces p bitwise.
std::string format_pencil(const Pencil& p);

}  // namespace zpencil

#endif  // ZPENCIL_IO_HPP
