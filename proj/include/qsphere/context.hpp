#ifndef QSPHERE_CONTEXT_HPP
#define QSPHERE_CONTEXT_HPP

#include <stdexcept>

namespace qsphere {

enum class Precision { standard, extended };

// Shared deformation/truncation parameters. ell = 0 is admitted so that the
// circle-level structure (F_0 commutators, rank-0 canonical elements) can be
// exercised; the equivariant modules separately require ell >= 2.
struct QContext {
    double q = 0.5;
    int ell = 2;
    int cutoff = 8;
    double tol = 1e-12;
    Precision precision = Precision::standard;

    void validate() const {
        if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("q must lie in [0,1)");
        if (ell < 0) throw std::domain_error("ell must be nonnegative");
        if (cutoff < 2) throw std::domain_error("cutoff must be at least 2");
        if (!(tol > 0.0)) throw std::domain_error("tol must be positive");
    }

    int sigma_size() const { return 2 * ell + 1; }
    int z_coordinate() const { return ell + 1; } // the lone Z-valued coordinate
};

} // namespace qsphere

#endif
