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

#include "encclone/error.h"
#include "encclone/noise.h"

namespace encclone {

DensityMatrix execute_noisy_density(const Circuit &c, const NoiseParams &params, std::size_t max_qubits) {
    DensityMatrix rho(c.num_qubits(), max_qubits);
    const auto events = noisy_program(c, params);
    for (const auto &ev : events) {
        std::span<const Qubit> t(ev.qubits.data(), ev.arity);
        switch (ev.kind) {
            case NoiseEvent::Kind::Gate:
                rho.apply(c.ops()[ev.op].gate, t);
                break;
            case NoiseEvent::Kind::Depolarize:
                rho.depolarize(t, ev.value);
                break;
            case NoiseEvent::Kind::Idle:
                if (params.twirl_idle) {
                    rho.apply_channel(pauli_kraus(twirled_idle(params.t1, params.t2, ev.value)), t);
                } else {
                    rho.apply_channel(idle_kraus(params.t1, params.t2, ev.value), t);
                }
                break;
        }
    }
    return rho;
}

}  // namespace encclone
