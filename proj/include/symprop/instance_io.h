// Copyright 2026 The Symprop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-oriented instance format; see README.md for the schema.

#ifndef SYMPROP_INSTANCE_IO_H_
#define SYMPROP_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "symprop/binary_program.h"

namespace symprop {

// Throws ParseError (with line number) on malformed text and
// ValidationError on non-bijective generators or bad indices.
BinaryProgram ParseInstance(std::string_view text);
std::string FormatInstance(const BinaryProgram& bp);

BinaryProgram ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const BinaryProgram& bp, const std::string& path);

}  // namespace symprop

#endif  // SYMPROP_INSTANCE_IO_H_
