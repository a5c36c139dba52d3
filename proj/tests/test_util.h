// Copyright 2026 The hankelmatch Authors
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

#ifndef HANKELMATCH_TESTS_TEST_UTIL_H_
#define HANKELMATCH_TESTS_TEST_UTIL_H_

#include <gtest/gtest.h>

#include "hankelmatch/error.h"
#include "oracles.h"

namespace hankelmatch::testing {

// Code of the Error thrown by fn. Marks the test failed and returns kIo
// when nothing is thrown.
template <typename Fn>
ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

}  // namespace hankelmatch::testing

#endif  // HANKELMATCH_TESTS_TEST_UTIL_H_
