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


#ifndef ENCCLONE_VERIFY_H
#define ENCCLONE_VERIFY_H

#include <string>
#include <vector>

namespace encclone {

/// One invariant or oracle comparison. `deviation` is the measured error and
/// passes when it does not exceed `tolerance`.
struct VerifyCheck {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Oracle equivalence of the encryption, decryption and V circuits, native
/// lowering, noiseless recovery, mixedness of the clones, counting laws and
/// the cloning-machine closed forms.
std::vector<VerifyCheck> run_verification();

}  // namespace encclone

#endif
