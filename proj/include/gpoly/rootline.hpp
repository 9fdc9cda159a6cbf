#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpoly/roots.hpp"

namespace gpoly {

/// True iff every complex root of p is real. Throws DomainError on p == 0.
bool is_real_rooted(const UniPoly& p);

enum class Relation { Strict, Weak, Fails };

std::string_view relation_name(Relation r);

/// Outcome of the interlacing test g ⪯ f.
struct InterlacingVerdict {
    Relation relation = Relation::Weak;
    /// Why the relation fails ("degree gap", "order violated"), or which
    /// degenerate convention applied.
    std::string reason;
    /// For Fails with an order violation: (root of g, root of f), each
    /// refined to width <= 1e-6.
    std::optional<std::pair<IsolatingInterval, IsolatingInterval>> witness;
    /// Distinct common roots of g and f.
    std::vector<IsolatingInterval> shared_roots;
    /// Informational: every comparison between nonzero roots was strict.
    bool strict_away_from_zero = true;
};

/// g ⪯ f for real-rooted polynomials with nonnegative coefficients.
///
/// deg g == deg f needs b_n <= a_n <= ... <= b_1 <= a_1 and
/// deg f == deg g + 1 needs a_n <= b_{n-1} <= a_{n-1} <= ... <= b_1 <= a_1,
/// with roots counted by multiplicity and sorted descending. Zero
/// polynomials on either side, and a constant g against f of degree <= 1,
/// are weak by convention. Other degree gaps fail. Throws DomainError for
/// negative coefficients or non-real-rooted input.
InterlacingVerdict interlaces(const UniPoly& g, const UniPoly& f);

enum class Family { FixedD, FixedN, Diag2d, Diag2dPlus1, DiagHalf };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct FamilyPair {
    int index = 0;
    int n_from = 0, d_from = 0;
    int n_to = 0, d_to = 0;
    InterlacingVerdict verdict;
};

struct FamilyReport {
    Family family = Family::FixedD;
    /// fixed-d: d; fixed-n: n; unused otherwise.
    int param = 0;
    int limit = 0;
    std::vector<FamilyPair> pairs;
    bool pass = true;
};

/// Members, in order:
///   fixed-d    g(n, param) for param+1 <= n <= limit
///   fixed-n    g(param, d) for 1 <= d <= floor(param/2); limit unused
///   diag-2d    g(2d, d) with 2d <= limit
///   diag-2d+1  g(2d+1, d) with 2d+1 <= limit
///   diag-half  g(n, floor(n/2)) for 2 <= n <= limit
/// and checks each consecutive pair (earlier ⪯ later).
FamilyReport verify_sturm_family(Family family, int param, int limit, int threads = 1);

/// F = phi * f + sum_j psi_j * h_j, checked exactly on construction.
class LiuWangInstance {
public:
    LiuWangInstance(UniPoly F, UniPoly f, std::vector<UniPoly> h, UniPoly phi, std::vector<UniPoly> psi);

    /// Builds F from the other parts, so the identity holds by construction.
    static LiuWangInstance assemble(UniPoly f, std::vector<UniPoly> h, UniPoly phi, std::vector<UniPoly> psi);

    const UniPoly& F() const { return F_; }
    const UniPoly& f() const { return f_; }
    const std::vector<UniPoly>& h() const { return h_; }
    const UniPoly& phi() const { return phi_; }
    const std::vector<UniPoly>& psi() const { return psi_; }

    std::string label;

private:
    UniPoly F_, f_;
    std::vector<UniPoly> h_;
    UniPoly phi_;
    std::vector<UniPoly> psi_;
};

struct LiuWangViolation {
    /// "degree", "interlacing", "leading-sign" or "psi-sign".
    std::string condition;
    std::string reason;
    /// psi-sign: the root of f where psi_j > 0.
    std::optional<IsolatingInterval> root;
};

struct LiuWangVerdict {
    bool satisfied = false;
    /// Strict conclusion f ≺ F also certified: at every root some j has
    /// h_j ≺ f and psi_j(r) < 0.
    bool strict = false;
    std::vector<LiuWangViolation> violations;
};

LiuWangVerdict liu_wang_check(const LiuWangInstance& inst);

/// Same f, h, phi with psi_j negated and F rebuilt.
LiuWangInstance with_negated_psi(const LiuWangInstance& inst, std::size_t j);

/// g(n+2,d) = phi g(n+1,d) + psi g(n,d) from the fixed-d three-term
/// identity; n >= d + 1.
LiuWangInstance liu_wang_fixed_d(int n, int d);
/// g(n,d+2) = C1 g(n,d+1) + C2 g(n,d) from the fixed-n three-term identity;
/// 1 <= d <= floor(n/2) - 2.
LiuWangInstance liu_wang_fixed_n(int n, int d);
/// g(2d+4,d+2) from g(2d+2,d+1), g(2d,d); d >= 0.
LiuWangInstance liu_wang_even_diagonal(int d);
/// g(2d+3,d+1) from g(2d+1,d), g(2d-1,d-1); d >= 1.
LiuWangInstance liu_wang_odd_diagonal(int d);
/// g(2d+3,d+1) = (2d+1)/(d+1) g(2d+2,d+1) + dt/(d+1) g(2d+1,d); d >= 1.
LiuWangInstance liu_wang_half_odd_step(int d);
/// g(2d+4,d+2) = 2 g(2d+3,d+1) + t g(2d+2,d+1); d >= 0.
LiuWangInstance liu_wang_half_even_step(int d);

/// Every instance of `family` whose F has first index <= n_max.
std::vector<LiuWangInstance> liu_wang_grid(Family family, int n_max);

}  // namespace gpoly
