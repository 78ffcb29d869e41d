#ifndef OPDC_REFLECTION_HPP
#define OPDC_REFLECTION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opdc/polynomial.hpp"
#include "opdc/rational.hpp"

namespace opdc {

/// Real reflection (Verblunsky) parameters a_0, a_1, ... with the fixed
/// convention a_{-1} = -1. Backed either by an explicit finite prefix or
/// by a closed-form generator (the coefficient families are infinite).
///
/// Only the squared quantity rsq_n = |1 - a_n^2| is ever materialized
/// exactly; r_n = sqrt(rsq_n) appears in the float matrix builders only.
class ReflectionSequence {
public:
    using Generator = std::function<Rational(int)>;

    static ReflectionSequence from_list(std::vector<Rational> a);
    /// `name` identifies the family; `metadata` is an opaque string
    /// (serialized parameters) carried through dumps for round-tripping.
    static ReflectionSequence from_generator(Generator gen, std::string name = "generator",
                                             std::string metadata = "");

    /// a_n for n >= -1; a(-1) is always -1. List-backed sequences throw
    /// OutOfRange past their prefix.
    Rational a(int n) const;

    /// |1 - a_n^2|, exact.
    Rational rsq(int n) const;

    /// -1 iff |a_n| > 1, else +1.
    int epsilon(int n) const;

    bool is_list() const { return !gen_; }
    int prefix_size() const { return static_cast<int>(list_.size()); }
    const std::vector<Rational>& prefix() const { return list_; }
    const std::string& name() const { return name_; }
    const std::string& metadata() const { return metadata_; }

private:
    ReflectionSequence() = default;
    std::vector<Rational> list_;
    Generator gen_;
    std::string name_ = "list";
    std::string metadata_;
};

/// Monic Szego pair (Phi_n, Phi_n*).
struct SzegoPair {
    Polynomial phi;
    Polynomial phi_star;
    int n = 0;
};

/// Runs Phi_{k+1} = z Phi_k - a_k Phi_k*,  Phi_{k+1}* = Phi_k* - a_k z Phi_k
/// from Phi_0 = Phi_0* = 1.
SzegoPair szego_polynomials(const ReflectionSequence& seq, int n);

struct Classification {
    std::vector<int> epsilon;
    std::vector<Rational> rsq;
    bool classical = true;   // all |a_k| < 1
    bool degenerate = false; // some |a_k| = 1
};

Classification classify(const ReflectionSequence& seq, int n);

} // namespace opdc

#endif
