#pragma once

#include "gkz24/lattice.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gkz24 {

/// Variable label: a lattice point, optionally tagged with a factor index for
/// complete-intersection coordinate sets (factor = -1 means untagged).
struct VarLabel {
    int factor = -1;
    std::vector<int> pt;

    auto operator<=>(const VarLabel&) const = default;
    std::string to_string() const;
    static VarLabel parse(const std::string& s);
};

/// Ordered, named index set for a Weyl algebra.
struct VariableSpace {
    std::string name;
    std::vector<VarLabel> labels;
    bool has_t = false;
    std::map<VarLabel, int> index;

    VariableSpace(std::string nm, std::vector<VarLabel> lb, bool t);
    int find(const VarLabel& l) const;  // -1 when absent
    int size() const { return static_cast<int>(labels.size()); }
    bool same_as(const VariableSpace& o) const { return labels == o.labels; }
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

SpacePtr make_space(std::string name, const std::vector<std::vector<Int>>& points, bool has_t = false);
SpacePtr make_ci_space(std::string name, const std::vector<std::vector<std::vector<Int>>>& factor_points);

/// Exponent vector, sparse: sorted (variable index, positive exponent) pairs.
struct Monomial {
    std::vector<std::pair<int, int>> ve;

    static Monomial one() { return {}; }
    static Monomial var(int v, int e = 1);
    int exponent(int v) const;
    int degree() const;
    Monomial times(int v, int e) const;  // e may be negative; asserts result >= 0
    auto operator<=>(const Monomial&) const = default;
};

/// Polynomial in the formal degeneration parameter t, exact rational
/// coefficients, ascending powers, trailing zeros trimmed.
class TPoly {
  public:
    TPoly() = default;
    TPoly(const Rat& c) { if (c != 0) c_ = {c}; }
    TPoly(long c) : TPoly(Rat(c)) {}
    static TPoly t(int power = 1, const Rat& c = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int k) const;
    Rat eval(const Rat& tval) const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    bool operator==(const TPoly& o) const { return c_ == o.c_; }

    std::string to_string() const;
    static TPoly parse(const std::string& s);

  private:
    std::vector<Rat> c_;
    void trim();
};

struct TermKey {
    Monomial poly;  // variables, to the left
    Monomial der;   // derivatives
    auto operator<=>(const TermKey&) const = default;
};

/// Normal-ordered element of the Weyl algebra over a variable space, with
/// t-polynomial coefficients. Canonical form: no zero coefficients, so
/// equality is map equality.
class WeylOperator {
  public:
    explicit WeylOperator(SpacePtr space) : space_(std::move(space)) {}

    const SpacePtr& space() const { return space_; }
    const std::map<TermKey, TPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const;  // max derivative degree
    bool has_t() const;

    void add_term(const Monomial& poly, const Monomial& der, const TPoly& c);
    WeylOperator& operator+=(const WeylOperator& o);
    WeylOperator& operator-=(const WeylOperator& o);
    friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
    friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
    WeylOperator scaled(const TPoly& c) const;
    bool operator==(const WeylOperator& o) const;

    WeylOperator specialize_t(const Rat& tval) const;

    std::string to_text() const;
    static WeylOperator parse_text(SpacePtr space, const std::string& text);

  private:
    SpacePtr space_;
    std::map<TermKey, TPoly> terms_;
};

/// Normal-ordered product AB via d_i x_j = x_j d_i + delta_ij.
WeylOperator op_compose(const WeylOperator& A, const WeylOperator& B);
/// AB - BA.
WeylOperator op_commutator(const WeylOperator& A, const WeylOperator& B);

/// Sparse truncated Laurent-type series: terms c * prod(b0_i^{e_i}) * rest,
/// where b0_i are the designated inverted variables (one per factor). The
/// shape constraint deg_i(rest) == -e_i - 1 defines the potential slots;
/// truncation keeps total level sum_i deg_i(rest) <= k_max.
struct SeriesKey {
    std::vector<int> e;
    Monomial rest;
    auto operator<=>(const SeriesKey&) const = default;
};

class TruncatedSeries {
  public:
    TruncatedSeries(SpacePtr space, int k_max, std::vector<int> inverted_vars,
                    std::vector<int> var_factor);

    const SpacePtr& space() const { return space_; }
    int k_max() const { return k_max_; }
    const std::vector<int>& inverted() const { return inverted_; }
    const std::map<SeriesKey, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SeriesKey& k, const Rat& c);
    int factor_of(int var) const { return var_factor_[var]; }
    int factors() const { return static_cast<int>(inverted_.size()); }

    std::string dump() const;  // one line per term

  private:
    SpacePtr space_;
    int k_max_;
    std::vector<int> inverted_;
    std::vector<int> var_factor_;
    std::map<SeriesKey, Rat> terms_;
};

/// Termwise application, truncated to fully determined slots. Requires the
/// operator's t-degree to be zero (specialize first). Space mismatch throws.
TruncatedSeries apply_to_series(const WeylOperator& A, const TruncatedSeries& s);

}  // namespace gkz24
