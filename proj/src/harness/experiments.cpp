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


#include "encclone/experiments.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "encclone/density_matrix.h"
#include "encclone/error.h"
#include "encclone/execute.h"
#include "encclone/noise.h"
#include "encclone/rng.h"
#include "encclone/statevector.h"

namespace encclone {

namespace {

// Trajectory statistics are reported from this many groups of trajectories.
constexpr std::size_t kBatches = 32;

// (mean, weight) per group; a single group means an exact value.
using Batches = std::vector<std::pair<double, std::size_t>>;

FidelityEstimate summarize(const Batches &b, EstimateMethod method) {
    double total = 0, mean = 0;
    for (const auto &[m, w] : b) {
        total += static_cast<double>(w);
        mean += m * static_cast<double>(w);
    }
    mean /= total;
    double sigma = 0;
    if (b.size() > 1) {
        double s2 = 0;
        for (const auto &[m, w] : b) {
            s2 += static_cast<double>(w) * (m - mean) * (m - mean);
        }
        s2 /= static_cast<double>(b.size() - 1);
        sigma = std::sqrt(s2 / total);
    }
    return {mean, sigma, method};
}

// constant + sum_i coeffs[i] * terms[i], group by group.
Batches combine(double constant, const std::vector<double> &coeffs, const std::vector<Batches> &terms) {
    Batches out = terms.front();
    for (std::size_t b = 0; b < out.size(); ++b) {
        double v = constant;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            v += coeffs[i] * terms[i][b].first;
        }
        out[b].first = v;
    }
    return out;
}

Circuit concat(const Circuit &base, const Circuit &suffix) {
    Circuit c = base;
    c.append(suffix);
    return c;
}

double parity_of(const std::vector<double> &probs) {
    double e = 0;
    for (std::size_t x = 0; x < probs.size(); ++x) {
        e += (std::popcount(x) % 2 == 0 ? 1.0 : -1.0) * probs[x];
    }
    return e;
}

void check_statevector_size(std::size_t qubits, std::size_t limit, const std::string &what) {
    if (qubits > limit) {
        throw CapacityError(what + " needs " + std::to_string(qubits) + " qubits; the statevector backend is limited to " +
                            std::to_string(limit) + " (raise max_qubits or use backend tableau-trajectory)");
    }
}

// Per-point noise with optional multiplicative jitter on the two-qubit error rate.
NoiseParams point_noise(const ExperimentConfig &cfg, std::uint64_t point_seed) {
    NoiseParams p = cfg.effective_noise();
    if (cfg.noise) {
        p.trajectories = std::max<std::size_t>(p.trajectories, static_cast<std::size_t>(cfg.shots));
        if (cfg.jitter > 0) {
            Rng rng(derive_seed(point_seed, 0x6a69));
            p.p2q = std::clamp(p.p2q * (1.0 + cfg.jitter * (2.0 * uniform01(rng) - 1.0)), 0.0, 1.0);
        }
    }
    return p;
}

// Runs a base circuit once on the configured backend and answers expectation,
// probability and sampling queries, optionally after a measurement suffix.
class Engine {
   public:
    Engine(const ExperimentConfig &cfg, const Circuit &base, std::uint64_t point_seed, const std::string &what)
        : backend_(cfg.backend), base_(base), noise_(point_noise(cfg, point_seed)), seed_(point_seed) {
        switch (backend_) {
            case Backend::Statevector:
                check_statevector_size(base.num_qubits(), cfg.max_statevector_qubits, what);
                psi_ = std::make_unique<StateVector>(run_statevector(base, cfg.max_statevector_qubits));
                break;
            case Backend::Density:
                rho_ = std::make_unique<DensityMatrix>(execute_noisy_density(base, noise_));
                break;
            case Backend::Trajectory:
                traj_ = std::make_unique<TrajectoryEnsemble>(base, noise_, derive_seed(point_seed, 0));
                break;
        }
    }

    Backend backend() const {
        return backend_;
    }

    Batches expect(const PauliString &p) const {
        if (psi_) {
            return {{psi_->expect_pauli(p), 1}};
        }
        if (rho_) {
            return {{rho_->expect_pauli(p), 1}};
        }
        return traj_->pauli_batches(p, kBatches);
    }

    Batches probability(std::span<const Qubit> qubits, std::uint64_t outcome) const {
        if (traj_) {
            return traj_->probability_batches(qubits, outcome, kBatches);
        }
        return {{probabilities({}, qubits)[outcome], 1}};
    }

    // Exact outcome distribution after `suffix`; statevector and density only.
    // Results are cached so a setting used for both exact and sampled
    // estimates is simulated once.
    std::vector<double> probabilities(const std::optional<Circuit> &suffix, std::span<const Qubit> qubits) const {
        if (!psi_ && !rho_) {
            throw InvalidArgument("exact outcome distributions need the statevector or density backend");
        }
        std::string key = suffix ? serialize(*suffix) : std::string();
        for (Qubit q : qubits) {
            key += " " + std::to_string(q);
        }
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
        std::vector<double> probs;
        if (psi_) {
            if (!suffix) {
                probs = psi_->probabilities(qubits);
            } else {
                StateVector psi = *psi_;
                apply_circuit(psi, *suffix);
                probs = psi.probabilities(qubits);
            }
        } else if (!suffix) {
            probs = rho_->probabilities(qubits);
        } else {
            probs = execute_noisy_density(concat(base_, *suffix), noise_).probabilities(qubits);
        }
        cache_.emplace(key, probs);
        return probs;
    }

    // Whether `suffix` can be sampled on this backend.
    bool can_sample(const Circuit &suffix) const {
        return !traj_ || suffix.is_clifford();
    }

    CountsTable sample(const Circuit &suffix, std::span<const Qubit> qubits, std::uint64_t shots,
                       std::uint64_t setting) const {
        const std::uint64_t seed = derive_seed(seed_, 1000 + setting);
        if (psi_ || rho_) {
            return sample_distribution(probabilities(suffix, qubits), qubits.size(), shots, seed);
        }
        TrajectoryEnsemble ens(concat(base_, suffix), noise_, derive_seed(seed_, 2000 + setting));
        return ens.sample(qubits, shots, seed);
    }

   private:
    Backend backend_;
    Circuit base_;
    NoiseParams noise_;
    std::uint64_t seed_;
    std::unique_ptr<StateVector> psi_;
    std::unique_ptr<DensityMatrix> rho_;
    std::unique_ptr<TrajectoryEnsemble> traj_;
    mutable std::map<std::string, std::vector<double>> cache_;
};

PauliString two_body(std::size_t n, Qubit a, Pauli pa, Qubit b, Pauli pb) {
    return PauliString::sparse(n, {{a, pa}, {b, pb}});
}

// <Phi+| rho |Phi+> = (1 + XX - YY + ZZ) / 4 on the pair (a, b).
FidelityEstimate bell_fidelity(const Engine &e, std::size_t n, Qubit a, Qubit b) {
    std::vector<Batches> terms{e.expect(two_body(n, a, Pauli::X, b, Pauli::X)),
                               e.expect(two_body(n, a, Pauli::Y, b, Pauli::Y)),
                               e.expect(two_body(n, a, Pauli::Z, b, Pauli::Z))};
    return summarize(combine(0.25, {0.25, -0.25, 0.25}, terms), EstimateMethod::Exact);
}

Circuit measurement_suffix(std::size_t num_qubits, std::span<const Qubit> qubits) {
    Circuit c(num_qubits);
    for (Qubit q : qubits) {
        c.measure(q);
    }
    return c;
}

// POM over `qubits` from r + 1 sampled settings, or nullopt when a rotation
// cannot run on the backend.
std::optional<FidelityEstimate> sampled_pom(const Engine &e, std::size_t num_qubits, std::span<const Qubit> qubits,
                                            std::uint64_t shots) {
    const std::size_t r = qubits.size();
    POMData data;
    data.r = r;
    data.shots_per_setting = shots;
    data.z_counts = e.sample(measurement_suffix(num_qubits, qubits), qubits, shots, 0);
    for (std::size_t k = 1; k <= r; ++k) {
        Circuit suffix(num_qubits);
        append_pom_rotation(suffix, qubits, k, r);
        suffix.append(measurement_suffix(num_qubits, qubits));
        if (!e.can_sample(suffix)) {
            return std::nullopt;
        }
        data.e_k.push_back(parity_expectation(e.sample(suffix, qubits, shots, k)));
    }
    return pom_fidelity(data);
}

// POM from expectation values: exact outcome distributions where available,
// the Pauli expansion of each rotated parity otherwise.
FidelityEstimate expected_pom(const Engine &e, std::size_t num_qubits, std::span<const Qubit> qubits) {
    const std::size_t r = qubits.size();
    const std::uint64_t ones = (std::uint64_t{1} << r) - 1;
    if (e.backend() != Backend::Trajectory) {
        const auto p = e.probabilities(std::nullopt, qubits);
        std::vector<double> e_k;
        for (std::size_t k = 1; k <= r; ++k) {
            Circuit suffix(num_qubits);
            append_pom_rotation(suffix, qubits, k, r);
            e_k.push_back(parity_of(e.probabilities(suffix, qubits)));
        }
        return pom_fidelity_exact(p[0], p[ones], e_k);
    }
    // F = (P + chi) / 2 with chi = (1/r) sum_k (-1)^k E_k.
    std::vector<Batches> terms{e.probability(qubits, 0), e.probability(qubits, ones)};
    std::vector<double> coeffs{0.5, 0.5};
    for (std::size_t k = 1; k <= r; ++k) {
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        for (const auto &wp : pom_pauli_expansion(num_qubits, qubits, k, r)) {
            terms.push_back(e.expect(wp.pauli));
            coeffs.push_back(0.5 * sign * wp.weight / static_cast<double>(r));
        }
    }
    return summarize(combine(0.0, coeffs, terms), EstimateMethod::POM);
}

std::vector<Qubit> signal_qubits(const QubitLayout &layout, std::size_t n, RoleKind kind) {
    std::vector<Qubit> out;
    for (std::uint32_t i = 1; i <= n; ++i) {
        out.push_back(layout.at({kind, i, 0, 0}));
    }
    return out;
}

// Bell pairs (Atilde, A) and (S_i, N_i) followed by the encryption.
Circuit prepared_and_encrypted(std::size_t n, const QubitLayout &layout, bool encrypt) {
    Circuit c(layout.size());
    const Qubit at = layout.at({RoleKind::Ancilla, 0, 0, 0});
    const Qubit a = layout.at({RoleKind::Input, 0, 0, 0});
    append_bell_prep(c, at, a);
    const auto s = signal_qubits(layout, n, RoleKind::Signal);
    const auto nz = signal_qubits(layout, n, RoleKind::Noise);
    for (std::size_t i = 0; i < n; ++i) {
        append_bell_prep(c, s[i], nz[i]);
    }
    if (encrypt) {
        append_encryption(c, a, s);
    }
    c.set_layout(std::make_shared<QubitLayout>(layout));
    return c;
}

}  // namespace

std::vector<Exp1Row> run_experiment1(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<Exp1Row> rows;
    for (std::size_t point = 0; point < cfg.n_values.size(); ++point) {
        const std::size_t n = cfg.n_values[point];
        const Pipeline p = build_pipeline(n, cfg.chosen_clone);
        const std::size_t nq = p.circuit.num_qubits();
        const std::uint64_t seed = derive_seed(cfg.seed, point);
        Engine e(cfg, p.circuit, seed, "n = " + std::to_string(n));
        const Qubit pair[2] = {p.ancilla, p.recovered};

        Exp1Row row;
        row.n = n;
        row.qubits = nq;

        Circuit bsm(nq);
        append_bsm_basis(bsm, p.ancilla, p.recovered);
        bsm.append(measurement_suffix(nq, pair));
        row.bsm_metrics = layer_metrics(concat(p.circuit, bsm), cfg.noise_params.durations);
        row.bsm = bsm_fidelity(e.sample(bsm, pair, cfg.shots, 100));

        row.pom_metrics = layer_metrics(concat(p.circuit, measurement_suffix(nq, pair)), cfg.noise_params.durations);
        row.pom = *sampled_pom(e, nq, pair, cfg.shots);
        row.exact = bell_fidelity(e, nq, p.ancilla, p.recovered);
        rows.push_back(row);
    }
    return rows;
}

Circuit build_chsh_circuit(std::size_t n, const std::string &scenario,
                           const std::function<void(Circuit &, Qubit, ChshQubit)> &rotate) {
    const QubitLayout layout = standard_layout(n);
    Circuit c = prepared_and_encrypted(n, layout, true);
    const Qubit at = layout.at({RoleKind::Ancilla, 0, 0, 0});
    const Qubit s1 = layout.at({RoleKind::Signal, 1, 0, 0});
    auto readout = [&](Qubit q, ChshQubit which) {
        rotate(c, q, which);
        c.measure(q);
    };
    if (scenario == "2-1") {
        readout(at, ChshQubit::Reference);
        c.append(build_decryption(n, 1, layout));
        readout(s1, ChshQubit::Clone);
    } else if (scenario == "2-2") {
        c.append(build_decryption(n, 1, layout));
        readout(at, ChshQubit::Reference);
        readout(s1, ChshQubit::Clone);
    } else if (scenario == "2-3") {
        c.append(build_decryption(n, 1, layout));
        readout(s1, ChshQubit::Clone);
        rotate(c, at, ChshQubit::Reference);
        // A zero-length IDLE keeps the two readouts in separate barriers, so
        // Atilde idles through the clone's readout.
        c.idle(at, 0.0);
        c.measure(at);
    } else if (scenario == "undecrypted") {
        readout(at, ChshQubit::Reference);
        readout(s1, ChshQubit::Clone);
    } else {
        throw InvalidArgument("unknown scenario '" + scenario + "'");
    }
    c.set_layout(std::make_shared<QubitLayout>(layout));
    return c;
}

std::vector<Exp2Row> run_experiment2(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<Exp2Row> rows;
    std::size_t point = 0;
    for (std::size_t n : cfg.n_values) {
        const QubitLayout layout = standard_layout(n);
        const Qubit at = layout.at({RoleKind::Ancilla, 0, 0, 0});
        const Qubit s1 = layout.at({RoleKind::Signal, 1, 0, 0});
        const std::size_t nq = layout.size();
        const Qubit pair[2] = {at, s1};
        for (const auto &scenario : cfg.scenarios) {
            const std::uint64_t seed = derive_seed(cfg.seed, point++);
            const std::string what = "n = " + std::to_string(n) + " scenario " + scenario;
            Exp2Row row;
            row.n = n;
            row.scenario = scenario;

            const Circuit plain = build_chsh_circuit(n, scenario, [](Circuit &, Qubit, ChshQubit) {});
            Engine e(cfg, plain, seed, what);
            const Pauli zx[2] = {Pauli::Z, Pauli::X};
            std::array<Batches, 4> corr;
            for (std::size_t t = 0; t < 4; ++t) {
                corr[t] = e.expect(two_body(nq, at, zx[t / 2], s1, zx[t % 2]));
            }
            // S = sqrt(2) (ZZ + XX); the cross terms cancel.
            const FidelityEstimate s_exact = summarize(combine(0.0, {kSqrt2, kSqrt2}, {corr[0], corr[3]}),
                                                       EstimateMethod::Exact);
            std::array<double, 4> means{}, zero{};
            for (std::size_t t = 0; t < 4; ++t) {
                means[t] = summarize(corr[t], EstimateMethod::Exact).value;
            }
            row.exact = chsh_from_correlators(means, zero);
            row.exact.s = s_exact.value;
            row.exact.sigma = s_exact.sigma;

            std::array<double, 4> values{}, sigmas{};
            if (cfg.backend == Backend::Trajectory) {
                // Pauli settings ZZ, ZX, XZ, XX; the rotated bases are not Clifford.
                for (std::size_t t = 0; t < 4; ++t) {
                    const Circuit c = build_chsh_circuit(n, scenario, [&](Circuit &cc, Qubit q, ChshQubit which) {
                        const Pauli basis = which == ChshQubit::Reference ? zx[t / 2] : zx[t % 2];
                        if (basis == Pauli::X) {
                            cc.h(q);
                        }
                    });
                    Engine et(cfg, c, seed, what);
                    values[t] = parity_expectation(et.sample(Circuit(nq), pair, cfg.shots, t));
                    sigmas[t] = correlator_sigma(values[t], cfg.shots);
                }
                row.sampled = chsh_from_correlators(values, sigmas);
            } else {
                for (std::size_t t = 0; t < 4; ++t) {
                    const Circuit c = build_chsh_circuit(n, scenario, [&](Circuit &cc, Qubit q, ChshQubit which) {
                        if (which == ChshQubit::Reference) {
                            if (t >= 2) {
                                cc.h(q);
                            }
                        } else {
                            append_ry(cc, q, -chsh_angle(t));
                        }
                    });
                    Engine et(cfg, c, seed, what);
                    values[t] = parity_expectation(et.sample(Circuit(nq), pair, cfg.shots, t));
                    sigmas[t] = correlator_sigma(values[t], cfg.shots);
                }
                row.sampled = chsh_from_terms(values, sigmas);
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<Exp3Row> run_experiment3(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<Exp3Row> rows;
    for (std::size_t point = 0; point < cfg.l_values.size(); ++point) {
        IterationRequest req;
        req.n = cfg.iteration_n;
        req.l = cfg.l_values[point];
        req.strategy = cfg.strategy;
        req.extra_subset = cfg.extra_subset;
        req.decrypt_before_extra = cfg.decrypt_before_extra;
        const IterationPlan plan = plan_iterated(req);
        Engine e(cfg, plan.circuit, derive_seed(cfg.seed, point), "iteration level l = " + std::to_string(req.l));

        Exp3Row row;
        row.l = plan.l;
        row.strategy = plan.strategy;
        row.extra_subset = plan.extra_subset;
        row.qubits = plan.total_qubits;
        row.clones = plan.clone_count;
        row.virtual_clones = plan.virtual_clone_count;
        row.key_size = plan.key_size;
        row.metrics = layer_metrics(plan.circuit, cfg.noise_params.durations);
        row.fidelity = bell_fidelity(e, plan.total_qubits, plan.ancilla, plan.recovered);
        rows.push_back(row);
    }
    return rows;
}

std::vector<Exp4Row> run_experiment4(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<Exp4Row> rows;
    for (std::size_t point = 0; point < cfg.r_values.size(); ++point) {
        const std::size_t r = cfg.r_values[point];
        const Experiment4Circuit ex = build_experiment4(r);
        const std::size_t nq = ex.circuit.num_qubits();
        Engine e(cfg, ex.circuit, derive_seed(cfg.seed, point), "GHZ size r = " + std::to_string(r));

        Exp4Row row;
        row.r = r;
        row.qubits = nq;
        row.metrics = layer_metrics(ex.circuit, cfg.noise_params.durations);
        row.fidelity = expected_pom(e, nq, ex.recovered);
        row.sampled = sampled_pom(e, nq, ex.recovered, cfg.shots);
        row.classification = witness_and_floor(row.fidelity, r);
        rows.push_back(row);
    }
    return rows;
}

std::vector<CorrelationRow> run_correlation_scan(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<CorrelationRow> rows;
    std::size_t point = 0;
    const Pauli xyz[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (std::size_t n : cfg.n_values) {
        const QubitLayout layout = standard_layout(n);
        const Qubit at = layout.at({RoleKind::Ancilla, 0, 0, 0});
        const std::pair<const char *, Circuit> stages[3] = {
            {"prepared", prepared_and_encrypted(n, layout, false)},
            {"encrypted", prepared_and_encrypted(n, layout, true)},
            {"decrypted", build_pipeline(n, cfg.chosen_clone).circuit},
        };
        for (const auto &[stage, circuit] : stages) {
            Engine e(cfg, circuit, derive_seed(cfg.seed, point++), "n = " + std::to_string(n));
            for (Qubit q = 0; q < layout.size(); ++q) {
                if (q == at) {
                    continue;
                }
                CorrelationRow row;
                row.n = n;
                row.stage = stage;
                row.qubit = layout.role(q).str();
                for (std::size_t i = 0; i < 3; ++i) {
                    for (std::size_t j = 0; j < 3; ++j) {
                        const auto b = e.expect(two_body(layout.size(), at, xyz[i], q, xyz[j]));
                        row.t[i][j] = std::abs(summarize(b, EstimateMethod::Exact).value);
                    }
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::vector<MixednessRow> run_mixedness(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<MixednessRow> rows;
    const Pauli xyz[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (std::size_t point = 0; point < cfg.n_values.size(); ++point) {
        const std::size_t n = cfg.n_values[point];
        const QubitLayout layout = standard_layout(n);
        const Circuit c = prepared_and_encrypted(n, layout, true);
        Engine e(cfg, c, derive_seed(cfg.seed, point), "n = " + std::to_string(n));
        const Qubit at = layout.at({RoleKind::Ancilla, 0, 0, 0});
        for (Qubit q = 0; q < layout.size(); ++q) {
            if (q == at) {
                continue;
            }
            MixednessRow row;
            row.n = n;
            row.qubit = layout.role(q).str();
            double r2 = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                const auto b = e.expect(PauliString::sparse(layout.size(), {{q, xyz[i]}}));
                row.bloch[i] = summarize(b, EstimateMethod::Exact).value;
                r2 += row.bloch[i] * row.bloch[i];
            }
            row.purity = 0.5 * (1.0 + r2);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace encclone
