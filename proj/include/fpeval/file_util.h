// Copyright 2026 The fpeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FPEVAL_FILE_UTIL_H_
#define FPEVAL_FILE_UTIL_H_

#include <optional>
#include <string>
#include <string_view>

namespace fpeval {

// Whole-file read. Throws IoError.
std::string ReadFile(const std::string& path);

// Writes to "<path>.tmp.<pid>" then renames over `path`. The temporary is
// removed if anything fails, so readers never observe a partial file.
void WriteFileAtomic(const std::string& path, std::string_view contents);

// Byte offset of the first invalid UTF-8 sequence, or nullopt.
std::optional<size_t> FindInvalidUtf8(std::string_view bytes);

}  // namespace fpeval

#endif  // FPEVAL_FILE_UTIL_H_
