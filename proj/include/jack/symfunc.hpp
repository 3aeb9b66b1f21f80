#pragma once

// Homogeneous symmetric functions in the monomial, power-sum and Jack J
// bases, with coefficients in Q(alpha). There are no variables anywhere:
// everything is abstract basis arithmetic, one degree at a time.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jack/alpha.hpp"
#include "jack/partition.hpp"

namespace jack {

enum class Basis { monomial, powersum, jackJ };

std::string to_string(Basis b);
// Letter used for basis elements in text: m, p or J.
std::string basis_letter(Basis b);
Basis parse_basis(const std::string& name);

class SymFunc {
public:
    using Terms = std::map<Partition, AlphaRat, PartitionOrder>;

    explicit SymFunc(Basis basis = Basis::monomial) : basis_(basis) {}

    static SymFunc basis_element(Basis basis, const Partition& lambda);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of the homogeneous component; nullopt for the zero function.
    std::optional<int> degree() const;
    AlphaRat coeff(const Partition& lambda) const;

    // Adds c to the coefficient of lambda, dropping it if it becomes zero.
    // Throws SizeMismatch if lambda has a different size from existing terms.
    void add(const Partition& lambda, const AlphaRat& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const AlphaRat& k);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const AlphaRat& k) { return a *= k; }
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    Basis basis_;
    Terms terms_;
};

// p_lambda expanded in the monomial basis (integer coefficients).
// "(1+3alpha+2alpha^2) m_3 + (3+3alpha) m_21 + 6 m_111"; "0" when empty.
std::string to_string(const SymFunc& f, Notation notation = Notation::ascii);

SymFunc power_in_monomial(const Partition& lambda);

// Value-preserving change of basis.
SymFunc convert(const SymFunc& f, Basis target);

// Integral-form Jack polynomial J_lambda in the monomial basis.
SymFunc jack_J(const Partition& lambda);
// The same function expanded in power sums (memoized alongside jack_J).
SymFunc jack_J_powersum(const Partition& lambda);

// Order in which Gram-Schmidt visits the monomial basis. Both are linear
// extensions of dominance order (smallest first); the result does not
// depend on the choice.
enum class LinearExtension { lexicographic, conjugate_lexicographic };

// Uncached Gram-Schmidt run for J_lambda restricted to the partitions that
// lambda dominates, visited in the given order.
SymFunc jack_J_gram_schmidt(const Partition& lambda, LinearExtension order);

// z_lambda = prod_i i^{m_i} m_i!, so n!/z_lambda counts permutations of cycle type lambda.
Integer z_factor(const Partition& lambda);

// alpha-deformed Hall inner product: <p_l, p_m> = delta z_l alpha^{len(l)}.
// Arguments of different degrees are orthogonal (returns 0).
AlphaRat hall_inner(const SymFunc& f, const SymFunc& g);

// prod over boxes of upper hook * lower hook.
AlphaPoly jack_norm(const Partition& lambda);

// Memoization of per-degree conversion matrices and Jack expansions.
// Internally synchronized; results are identical with the cache on or off.
void set_jack_cache_enabled(bool enabled);
bool jack_cache_enabled();
void clear_jack_cache();

}  // namespace jack
