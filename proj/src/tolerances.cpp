#include "formstab/tolerances.hpp"

#include <cstdlib>
#include <string>

namespace formstab {

namespace {

void read_env(const char* name, double& target) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return;
    try {
        std::size_t consumed = 0;
        const double parsed = std::stod(value, &consumed);
        if (consumed == std::string(value).size() && parsed > 0.0) {
            target = parsed;
        }
    } catch (const std::exception&) {
        // Unparseable override: keep the default.
    }
}

}  // namespace

Tolerances Tolerances::from_env() {
    Tolerances t;
    read_env("FORMSTAB_SYM_TOL", t.sym_tol);
    read_env("FORMSTAB_INV_TOL", t.inv_tol);
    read_env("FORMSTAB_CLUSTER_TOL", t.cluster_tol_scale);
    read_env("FORMSTAB_GEN_TOL", t.gen_tol_scale);
    read_env("FORMSTAB_DET_TOL", t.det_tol_scale);
    read_env("FORMSTAB_ORTH_TOL", t.orth_tol_scale);
    read_env("FORMSTAB_FACT_TOL", t.fact_tol_scale);
    return t;
}

}  // namespace formstab
