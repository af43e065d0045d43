// Copyright 2026 The rydsim Authors
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

// Exception hierarchy shared by all rydsim modules.

#pragma once

#include <stdexcept>
#include <string>

namespace ryd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimMismatch : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct DegenerateDrive : Error {
    using Error::Error;
};
struct StepTooCoarse : Error {
    using Error::Error;
};
struct PositivityViolation : Error {
    using Error::Error;
};
struct GapClosure : Error {
    using Error::Error;
};
struct VanishingAmplitude : Error {
    using Error::Error;
};
struct NotConverged : Error {
    using Error::Error;
};
struct InvalidDensity : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct UnknownKey : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace ryd
