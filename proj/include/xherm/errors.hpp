#pragma once

#include <stdexcept>
#include <string>

namespace xherm {

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Index lies in the gap sequence {1,2} of the exceptional family.
class gap_sequence_error : public domain_error {
public:
    explicit gap_sequence_error(int n)
        : domain_error("index " + std::to_string(n) +
                       " lies in the gap sequence of the family (for lambda=(1): {1,2}); "
                       "the Wronskian Wr(H_k1,...,H_n) degenerates there and no polynomial "
                       "of this index exists"),
          index_(n) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// Evaluation at a pole, e.g. z = +-i/sqrt(2).
class singularity_error : public domain_error {
public:
    using domain_error::domain_error;
};

class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Iterative scheme failed; carries its last two estimates.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double last, double previous)
        : std::runtime_error(what), last_(last), previous_(previous) {}
    double last() const noexcept { return last_; }
    double previous() const noexcept { return previous_; }

private:
    double last_;
    double previous_;
};

}  // namespace xherm
