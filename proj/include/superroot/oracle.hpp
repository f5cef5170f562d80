#pragma once

#include "superroot/catalog.hpp"
#include "superroot/pisystem.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace superroot {

/// Sparse square matrix over Q, keyed by (row, column). Zero entries are never stored.
using SparseMatrix = std::map<std::pair<int, int>, Rational>;

/// Homogeneous element x (x) t^k of a (loop) matrix superalgebra. The weight carries
/// the finite weight in eps/delta coordinates and the loop degree k in `null`.
struct AlgebraElement {
    EpsDeltaVector weight;
    int parity = 0;
    SparseMatrix m;

    bool is_zero() const { return m.empty(); }
    AlgebraElement& operator*=(const Rational& s);
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
};

/// Super bracket XY - (-1)^{|X||Y|} YX; loop degrees add.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// (-1)^{|x||z|}[x,[y,z]] + cyclic = 0, evaluated exactly.
bool super_jacobi_holds(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);

/// Concrete matrix model: sl(M|N) for A(m,n), osp for B, C, D; untwisted affine
/// types use the loop algebra without the central extension.
class Realization {
public:
    /// Throws UnsupportedType for twisted and exceptional types.
    static Realization build(const RootSystemHandle& handle);

    const RootSystemHandle& handle() const { return handle_; }
    bool is_loop() const { return handle_.is_affine(); }
    /// Size of the defining matrices.
    int size() const { return static_cast<int>(index_parity_.size()); }
    int index_parity(int a) const { return index_parity_[a]; }

    /// Basis of the finite weight space of `gamma` (null coefficient ignored); zero
    /// weight gives the Cartan subalgebra.
    std::vector<SparseMatrix> finite_space(const EpsDeltaVector& gamma) const;
    /// Basis of the weight space gamma + k null (k = gamma.null).
    std::vector<AlgebraElement> weight_space(const EpsDeltaVector& weight) const;
    /// Spanning vector of a real root space. Throws NotARoot.
    AlgebraElement root_vector(const RootVector& root) const;
    AlgebraElement root_vector(const EpsDeltaVector& root) const;

    /// alpha(h) for a Cartan element h (diagonal, any loop degree).
    Rational evaluate(const EpsDeltaVector& alpha, const AlgebraElement& h) const;

    /// e_i = x_{alpha_i}, f_i = x_{-alpha_i}, h_i = [e_i, f_i], with f_i scaled so the
    /// recomputed Cartan matrix matches the catalog normalization.
    const std::vector<AlgebraElement>& e() const { return e_; }
    const std::vector<AlgebraElement>& f() const { return f_; }
    const std::vector<AlgebraElement>& h() const { return h_; }
    /// a_ij = alpha_j(h_i) recomputed from the matrices.
    CartanData recomputed_cartan() const;

    /// Nonzero weights of the realization with |loop degree| <= k.
    std::set<EpsDeltaVector> roots(std::int64_t k = 0) const;
    /// Dimension of the finite (non-loop) algebra.
    std::size_t finite_dimension() const;

private:
    RootSystemHandle handle_;
    bool osp_ = false;
    std::vector<int> index_parity_;
    std::vector<EpsDeltaVector> index_weight_;
    std::vector<int> eps_index_; // matrix index read by eps_i on the diagonal
    std::vector<int> del_index_;
    RationalMatrix form_; // osp only
    std::vector<AlgebraElement> e_, f_, h_;

    explicit Realization(RootSystemHandle h) : handle_(std::move(h)) {}
};

/// Span with one reduced echelon basis per weight.
class Subalgebra {
public:
    std::map<EpsDeltaVector, std::size_t> weight_dimensions() const;
    std::size_t dimension() const;
    std::vector<AlgebraElement> basis() const;
    bool contains(const AlgebraElement& x) const;
    /// Adds x to the span; returns the reduced new basis vector, if any.
    std::optional<AlgebraElement> insert(const AlgebraElement& x);

    bool truncated = false;                   // a nonzero bracket left the degree window
    std::optional<std::int64_t> degree_bound; // K

    friend bool operator==(const Subalgebra& a, const Subalgebra& b);

private:
    struct Vec {
        std::pair<int, int> pivot; // entry 1 here, 0 in every other vector of the weight
        AlgebraElement x;
    };
    std::map<EpsDeltaVector, std::vector<Vec>> spaces_;
    AlgebraElement reduce(AlgebraElement x) const;
};

/// Span of all iterated brackets of `gens`. With a degree bound K, brackets with
/// |degree| > K are not kept and `truncated` is set; this is exact inside the window
/// when every generator has degree of one sign. Throws TruncationHit when a loop
/// element is involved and no bound is given.
Subalgebra generated_subalgebra(const std::vector<AlgebraElement>& gens,
                                std::optional<std::int64_t> K = std::nullopt);

/// g(sigma) for sigma a pi-system in the positive roots. Finite types: full
/// generation from +-sigma. Loop types: the positive and negative halves are grown
/// separately (each monotone in degree, hence exact for |degree| <= K) plus the
/// coroots [x_a, x_-a].
Subalgebra root_generated_subalgebra(const Realization& r, const RootSet& sigma,
                                     std::optional<std::int64_t> K = std::nullopt);

/// Real roots among the weights of `s`.
RootSet subalgebra_real_roots(const Subalgebra& s, const RootSystemHandle& handle);

/// Root vectors x_a for a in +-S.
std::vector<AlgebraElement> root_generators(const Realization& r, const RootSet& s, bool with_negatives = true);

struct TheoremVerdict {
    bool equal = false;
    RootSet closure_side;  // S_infinity restricted to |degree| <= K
    RootSet oracle_side;   // real roots of g(Sigma) with |degree| <= K
    ClosureStatus closure_status = ClosureStatus::Stabilized;
    std::int64_t height_bound = 0;
    std::optional<std::int64_t> window; // K for loop types
    bool full_closure_checked = false;  // finite types: mixed +- generation agrees too
    std::string detail;
};

/// Compares closure_S_infinity(sigma) with the real roots of the subalgebra generated
/// by the root vectors of +-sigma. For loop types both sides are cut at |degree| <= K
/// (default: max degree in sigma + 3). Throws NotARoot unless sigma is a pi-system
/// in the positive roots.
TheoremVerdict verify_theorem_main(const RootSet& sigma, const Realization& r,
                                   std::optional<std::int64_t> K = std::nullopt);

struct DynkinOracleReport {
    DynkinCertificate maps;
    TheoremVerdict theorem;
    bool spans_equal = false; // g(S_infinity) = g(Sigma)
    bool ok() const { return maps.ok() && theorem.equal && spans_equal; }
};

DynkinOracleReport verify_dynkin_oracle(const RootSet& sigma, const Realization& r,
                                        std::optional<std::int64_t> K = std::nullopt);

struct BracketCounterexample {
    std::string rule; // "bracket" or "reflection"
    RootVector alpha;
    RootVector beta;
    std::string detail;
};

struct BracketReport {
    std::size_t pairs_checked = 0;
    std::vector<BracketCounterexample> counterexamples;
};

/// For all real roots a, b of `s` (b != -a): [x_a, x_b] != 0 iff a + b is a root;
/// for non-isotropic a with -a also present: s_a(b) is a root of `s` (skipped when
/// it leaves the degree window).
BracketReport bracket_criteria_sweep(const Subalgebra& s, const Realization& r);

/// e, f, h acting on the (2k+1)-dimensional osp(1,2) module with basis v_0..v_2k.
struct Osp12Module {
    int k = 0;
    RationalMatrix e, f, h;
};
Osp12Module osp12_module_table(int k);

/// The table respects every structure constant of the realization of B(0,1)
/// on the basis e, f, h, [e,e], [f,f].
bool osp12_module_consistent(const Osp12Module& mod, const Realization& b01);

struct NilpotencyEntry {
    std::size_t i, j;
    int observed;  // least N with (ad e_i)^N e_j = 0
    int expected;  // from the Cartan entry
};

/// Finite realizations only; i != j.
std::vector<NilpotencyEntry> ad_nilpotency(const Realization& r);

} // namespace superroot
