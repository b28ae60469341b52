// Copyright 2026 The encclone Authors
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

#ifndef ENCCLONE_ERROR_H
#define ENCCLONE_ERROR_H

#include <stdexcept>
#include <string>

namespace encclone {

enum class ErrorCode {
    InvalidArgument = 1,
    OutOfRange = 2,
    Capacity = 3,
    NonClifford = 4,
    Io = 5,
    Parse = 6,
};

/// Base exception for every failure raised by the library. The C API maps
/// `code()` onto its integer status values.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {
    }
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string &what) : Error(ErrorCode::InvalidArgument, what) {
    }
};
struct OutOfRange : Error {
    explicit OutOfRange(const std::string &what) : Error(ErrorCode::OutOfRange, what) {
    }
};
struct CapacityError : Error {
    explicit CapacityError(const std::string &what) : Error(ErrorCode::Capacity, what) {
    }
};
struct NonCliffordError : Error {
    explicit NonCliffordError(const std::string &what) : Error(ErrorCode::NonClifford, what) {
    }
};
struct IoError : Error {
    explicit IoError(const std::string &what) : Error(ErrorCode::Io, what) {
    }
};
struct ParseError : Error {
    explicit ParseError(const std::string &what) : Error(ErrorCode::Parse, what) {
    }
};

}  // namespace encclone

#endif
