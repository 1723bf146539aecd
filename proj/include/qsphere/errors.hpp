#ifndef QSPHERE_ERRORS_HPP
#define QSPHERE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsphere {

// Interlacing or shape violation in a GT pattern. Carries the offending
// position in the paper's 1-based (row, column) convention.
class validation_error : public std::runtime_error {
public:
    validation_error(const std::string& msg, int row = 0, int col = 0)
        : std::runtime_error(msg), row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_, col_;
};

// A q-number denominator vanished while evaluating a CG factor. For a valid
// (tableau, move) pair this never fires; it signals an invalid move context.
class singularity_error : public std::runtime_error {
public:
    singularity_error(const std::string& msg, int a, int i, int j, int k)
        : std::runtime_error(msg), a_(a), i_(i), j_(j), k_(k) {}
    int a() const { return a_; }
    int i() const { return i_; }
    int j() const { return j_; }
    int k() const { return k_; }

private:
    int a_, i_, j_, k_;
};

class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class accuracy_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class abscissa_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class insufficient_data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The equivariant machinery follows the paper's ell > 1 assumption.
class unsupported_rank_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class size_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qsphere

#endif
