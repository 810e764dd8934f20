// Copyright 2026 The lclt Authors.
//
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

// CoeffTable <-> JSON. Doubles are written in shortest round-trip form, so
// write -> read -> write is byte-identical and every value is bit-exact.
// Infinite tail bounds are stored as the string "inf".

#ifndef LCLT_TABLE_IO_HPP_
#define LCLT_TABLE_IO_HPP_

#include <string>

#include "lclt/expansion.hpp"

namespace lclt {

// `envelope` is optional; it is written for the reader's benefit and
// ignored when parsing.
std::string coeff_table_to_json(const CoeffTable& t,
                                const Envelope* envelope = nullptr);
CoeffTable coeff_table_from_json(const std::string& text);

void write_coeff_table(const std::string& path, const CoeffTable& t,
                       const Envelope* envelope = nullptr);
CoeffTable read_coeff_table(const std::string& path);

}  // namespace lclt

#endif  // LCLT_TABLE_IO_HPP_
