// Copyright 2026 The hubbard-re Authors
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

#ifndef HUBBARD_RE_MODEL_HPP
#define HUBBARD_RE_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace hre {

enum class ModelKind { FermiHubbard, Cuprate, Pnictide };

/// Coupling record shared by the three models. Fields a model does not use
/// are ignored by every cost formula.
struct Couplings {
    // Fermi-Hubbard and cuprate.
    double t = 0;
    double t_prime = 0;
    double t_dprime = 0;
    // Pnictide.
    double t1 = 0;
    double t2 = 0;
    double t3 = 0;
    double t4 = 0;
    // On-site and inter-orbital interaction.
    double u = 0;
    double v = 0;

    Couplings scaled(double s) const;
    friend bool operator==(const Couplings &, const Couplings &) = default;
};

struct ModelSpec {
    ModelKind kind = ModelKind::FermiHubbard;
    int L = 4;
    Couplings c;
};

Couplings default_params(ModelKind kind);
ModelSpec default_spec(ModelKind kind, int L);

/// Throws std::invalid_argument for odd L, L < 2, non-finite couplings or a
/// zero leading hopping.
void validate(const ModelSpec &spec);

/// validate() plus the Trotter lattice rule: the cuprate plaquette tiling
/// needs L to be a multiple of 4.
void validate_trotter(const ModelSpec &spec);

/// Total energy error target 0.0051 L^2.
double extensive_error(int L);

/// LCU 1-norm of the shifted, JW-transformed Hamiltonian.
double lambda(const ModelSpec &spec);

/// Number of system qubits: 2L^2 for one-band models, 4L^2 for pnictide.
int system_qubits(ModelKind kind, int L);

std::string_view model_name(ModelKind kind);
ModelKind parse_model(std::string_view name);

/// Contents of a key-value configuration file. Lines are `key = value`
/// (':' also accepted); '#' starts a comment. Keys: model, L, t, t_prime,
/// t_dprime, t1..t4, u, v, delta_E_override.
struct ModelConfig {
    std::optional<ModelKind> kind;
    std::optional<int> L;
    std::map<std::string, double> couplings;
    std::optional<double> delta_E_override;
};

/// Throws std::invalid_argument on unknown keys or unparsable values.
ModelConfig parse_model_config(std::string_view text);
ModelConfig load_model_config(const std::string &path);

/// Sets one named coupling field. Throws on an unknown name.
void set_coupling(Couplings &c, std::string_view name, double value);

}  // namespace hre

#endif
