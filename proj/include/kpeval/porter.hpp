// Copyright 2026 The kpeval Authors
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

#ifndef KPEVAL_PORTER_H
#define KPEVAL_PORTER_H

#include <string>
#include <string_view>

namespace kpeval {

// Classic Porter suffix-stripping stemmer (all five step groups, including
// the two official revisions bli->ble and logi->log). The input is
// ASCII-lowercased before stemming; words of length <= 2 come back unchanged.
std::string porter_stem(std::string_view word);

}  // namespace kpeval

#endif  // KPEVAL_PORTER_H
