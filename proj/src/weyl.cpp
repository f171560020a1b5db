#include "gkz24/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace gkz24 {

std::string VarLabel::to_string() const {
    std::ostringstream os;
    if (factor >= 0) os << factor << ":";
    os << "(";
    for (size_t i = 0; i < pt.size(); ++i) {
        if (i) os << ",";
        os << pt[i];
    }
    os << ")";
    return os.str();
}

VarLabel VarLabel::parse(const std::string& s) {
    VarLabel l;
    size_t pos = 0;
    auto colon = s.find(':');
    if (colon != std::string::npos && colon < s.find('(')) {
        l.factor = std::stoi(s.substr(0, colon));
        pos = colon + 1;
    }
    if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("bad label: " + s);
    ++pos;
    std::string cur;
    for (; pos < s.size(); ++pos) {
        if (s[pos] == ',' || s[pos] == ')') {
            if (!cur.empty()) l.pt.push_back(std::stoi(cur));
            cur.clear();
            if (s[pos] == ')') return l;
        } else {
            cur += s[pos];
        }
    }
    throw std::invalid_argument("bad label: " + s);
}

VariableSpace::VariableSpace(std::string nm, std::vector<VarLabel> lb, bool t)
    : name(std::move(nm)), labels(std::move(lb)), has_t(t) {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (!index.emplace(labels[i], i).second)
            throw std::invalid_argument("duplicate label in variable space");
    }
}

int VariableSpace::find(const VarLabel& l) const {
    auto it = index.find(l);
    return it == index.end() ? -1 : it->second;
}

SpacePtr make_space(std::string name, const std::vector<std::vector<Int>>& points, bool has_t) {
    std::vector<VarLabel> labels;
    for (const auto& p : points) {
        VarLabel l;
        for (const auto& x : p) l.pt.push_back(static_cast<int>(x.get_si()));
        labels.push_back(std::move(l));
    }
    return std::make_shared<VariableSpace>(std::move(name), std::move(labels), has_t);
}

SpacePtr make_ci_space(std::string name, const std::vector<std::vector<std::vector<Int>>>& factor_points) {
    std::vector<VarLabel> labels;
    for (size_t f = 0; f < factor_points.size(); ++f) {
        for (const auto& p : factor_points[f]) {
            VarLabel l;
            l.factor = static_cast<int>(f);
            for (const auto& x : p) l.pt.push_back(static_cast<int>(x.get_si()));
            labels.push_back(std::move(l));
        }
    }
    return std::make_shared<VariableSpace>(std::move(name), std::move(labels), false);
}

Monomial Monomial::var(int v, int e) {
    Monomial m;
    if (e != 0) m.ve.emplace_back(v, e);
    return m;
}

int Monomial::exponent(int v) const {
    for (const auto& [w, e] : ve)
        if (w == v) return e;
    return 0;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [w, e] : ve) d += e;
    return d;
}

Monomial Monomial::times(int v, int e) const {
    Monomial out;
    bool placed = false;
    for (const auto& [w, ex] : ve) {
        if (w == v) {
            int ne = ex + e;
            assert(ne >= 0);
            if (ne > 0) out.ve.emplace_back(w, ne);
            placed = true;
        } else {
            if (!placed && w > v && e > 0) {
                out.ve.emplace_back(v, e);
                placed = true;
            }
            out.ve.emplace_back(w, ex);
        }
    }
    if (!placed && e != 0) {
        assert(e > 0);
        // insert in order
        out.ve.emplace_back(v, e);
        std::sort(out.ve.begin(), out.ve.end());
    }
    return out;
}

TPoly TPoly::t(int power, const Rat& c) {
    TPoly p;
    if (c != 0) {
        p.c_.assign(power + 1, Rat(0));
        p.c_[power] = c;
    }
    return p;
}

const Rat& TPoly::coeff(int k) const {
    static const Rat zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

Rat TPoly::eval(const Rat& tval) const {
    Rat out(0);
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) out = out * tval + c_[k];
    return out;
}

void TPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly out;
    if (a.c_.empty() || b.c_.empty()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    out.trim();
    return out;
}

static std::string rat_str(const Rat& r) { return r.get_str(); }

static Rat parse_rat(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

std::string TPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[k]);
        if (k == 1) os << "*t";
        else if (k > 1) os << "*t^" << k;
        first = false;
    }
    return os.str();
}

TPoly TPoly::parse(const std::string& s) {
    TPoly out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next + 3;
        int power = 0;
        std::string coefs = tok;
        auto star = tok.find("*t");
        if (star != std::string::npos) {
            coefs = tok.substr(0, star);
            std::string rest = tok.substr(star + 2);
            power = rest.empty() ? 1 : (rest[0] == '^' ? std::stoi(rest.substr(1)) : 1);
        }
        out += TPoly::t(power, parse_rat(coefs));
    }
    return out;
}

int WeylOperator::order() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.der.degree());
    return d;
}

bool WeylOperator::has_t() const {
    for (const auto& [k, c] : terms_)
        if (c.degree() > 0) return true;
    return false;
}

void WeylOperator::add_term(const Monomial& poly, const Monomial& der, const TPoly& c) {
    if (c.is_zero()) return;
    TermKey key{poly, der};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

static void check_space(const WeylOperator& a, const WeylOperator& b) {
    if (a.space() != b.space() && !a.space()->same_as(*b.space()))
        throw std::invalid_argument("operator space mismatch");
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
    check_space(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k.poly, k.der, c);
    return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
    check_space(*this, o);
    for (const auto& [k, c] : o.terms_) {
        TPoly neg;
        neg -= c;
        add_term(k.poly, k.der, neg);
    }
    return *this;
}

WeylOperator WeylOperator::scaled(const TPoly& c) const {
    WeylOperator out(space_);
    for (const auto& [k, v] : terms_) out.add_term(k.poly, k.der, v * c);
    return out;
}

bool WeylOperator::operator==(const WeylOperator& o) const {
    return space_->same_as(*o.space_) && terms_ == o.terms_;
}

WeylOperator WeylOperator::specialize_t(const Rat& tval) const {
    WeylOperator out(space_);
    for (const auto& [k, c] : terms_) out.add_term(k.poly, k.der, TPoly(c.eval(tval)));
    return out;
}

// d^q x^r = sum_k prod_i C(q_i,k_i) C(r_i,k_i) k_i! x^{r-k} d^{q-k}
WeylOperator op_compose(const WeylOperator& A, const WeylOperator& B) {
    check_space(A, B);
    WeylOperator out(A.space());
    for (const auto& [ka, ca] : A.terms()) {
        for (const auto& [kb, cb] : B.terms()) {
            // shared variables between ka.der and kb.poly
            std::vector<std::pair<int, std::pair<int, int>>> shared;  // var -> (q, r)
            for (const auto& [v, q] : ka.der.ve) {
                int r = kb.poly.exponent(v);
                if (r > 0) shared.emplace_back(v, std::make_pair(q, r));
            }
            // iterate k multi-index 0..min(q,r) per shared variable
            std::vector<int> kk(shared.size(), 0);
            while (true) {
                Rat mult(1);
                for (size_t i = 0; i < shared.size(); ++i) {
                    auto [q, r] = shared[i].second;
                    int k = kk[i];
                    // C(q,k) * C(r,k) * k!
                    Int c1, c2, fk;
                    mpz_bin_uiui(c1.get_mpz_t(), q, k);
                    mpz_bin_uiui(c2.get_mpz_t(), r, k);
                    mpz_fac_ui(fk.get_mpz_t(), k);
                    mult *= Rat(c1 * c2 * fk);
                }
                Monomial poly = ka.poly, der = kb.der;
                // poly := ka.poly * (kb.poly - k), der := (ka.der - k) * kb.der
                Monomial mid_poly = kb.poly, mid_der = ka.der;
                for (size_t i = 0; i < shared.size(); ++i) {
                    mid_poly = mid_poly.times(shared[i].first, -kk[i]);
                    mid_der = mid_der.times(shared[i].first, -kk[i]);
                }
                for (const auto& [v, e] : mid_poly.ve) poly = poly.times(v, e);
                for (const auto& [v, e] : mid_der.ve) der = der.times(v, e);
                out.add_term(poly, der, (ca * cb) * TPoly(mult));
                // next k
                size_t i = 0;
                for (; i < shared.size(); ++i) {
                    if (kk[i] < std::min(shared[i].second.first, shared[i].second.second)) {
                        ++kk[i];
                        std::fill(kk.begin(), kk.begin() + i, 0);
                        break;
                    }
                }
                if (i == shared.size()) break;
            }
        }
    }
    return out;
}

WeylOperator op_commutator(const WeylOperator& A, const WeylOperator& B) {
    return op_compose(A, B) - op_compose(B, A);
}

std::string WeylOperator::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << "\n";
        first = false;
        if (c.degree() > 0)
            os << "(" << c.to_string() << ")";
        else
            os << c.to_string();
        for (const auto& [v, e] : k.poly.ve) {
            os << " * b[" << space_->labels[v].to_string() << "]";
            if (e > 1) os << "^" << e;
        }
        for (const auto& [v, e] : k.der.ve) {
            os << " * d[" << space_->labels[v].to_string() << "]";
            if (e > 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    return os.str();
}

WeylOperator WeylOperator::parse_text(SpacePtr space, const std::string& text) {
    WeylOperator out(space);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line == "0") continue;
        // split on " * "
        std::vector<std::string> toks;
        size_t pos = 0;
        while (pos <= line.size()) {
            size_t next = line.find(" * ", pos);
            toks.push_back(line.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
            if (next == std::string::npos) break;
            pos = next + 3;
        }
        TPoly coeff;
        if (!toks[0].empty() && toks[0][0] == '(')
            coeff = TPoly::parse(toks[0].substr(1, toks[0].size() - 2));
        else
            coeff = TPoly(parse_rat(toks[0]));
        Monomial poly, der;
        for (size_t i = 1; i < toks.size(); ++i) {
            const std::string& t = toks[i];
            bool is_b = t[0] == 'b';
            auto lb = t.find('['), rb = t.rfind(']');
            VarLabel label = VarLabel::parse(t.substr(lb + 1, rb - lb - 1));
            int e = 1;
            if (rb + 1 < t.size() && t[rb + 1] == '^') e = std::stoi(t.substr(rb + 2));
            int v = space->find(label);
            if (v < 0) throw std::invalid_argument("unknown label " + label.to_string());
            if (is_b) poly = poly.times(v, e);
            else der = der.times(v, e);
        }
        out.add_term(poly, der, coeff);
    }
    return out;
}

TruncatedSeries::TruncatedSeries(SpacePtr space, int k_max, std::vector<int> inverted_vars,
                                 std::vector<int> var_factor)
    : space_(std::move(space)), k_max_(k_max), inverted_(std::move(inverted_vars)),
      var_factor_(std::move(var_factor)) {
    if (static_cast<int>(var_factor_.size()) != space_->size())
        throw std::invalid_argument("var_factor size mismatch");
}

void TruncatedSeries::add_term(const SeriesKey& k, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string TruncatedSeries::dump() const {
    std::ostringstream os;
    for (const auto& [k, c] : terms_) {
        for (size_t i = 0; i < k.e.size(); ++i) {
            if (i) os << " ";
            os << "b0[" << i << "]^" << k.e[i];
        }
        os << " : ";
        bool first = true;
        for (const auto& [v, e] : k.rest.ve) {
            if (!first) os << " ";
            os << space_->labels[v].to_string();
            if (e > 1) os << "^" << e;
            first = false;
        }
        if (first) os << "1";
        os << " : " << c.get_str() << "\n";
    }
    return os.str();
}

TruncatedSeries apply_to_series(const WeylOperator& A, const TruncatedSeries& s) {
    if (A.space() != s.space() && !A.space()->same_as(*s.space()))
        throw std::invalid_argument("apply_to_series: space mismatch");
    if (A.has_t()) throw std::invalid_argument("apply_to_series: operator has unspecialized t");
    const int nf = s.factors();
    std::vector<int> inv_index(s.space()->size(), -1);  // var -> factor when inverted
    for (int f = 0; f < nf; ++f) inv_index[s.inverted()[f]] = f;

    std::vector<int> vf(s.space()->size());
    for (int v = 0; v < s.space()->size(); ++v) vf[v] = s.factor_of(v);
    TruncatedSeries out(s.space(), s.k_max(), s.inverted(), std::move(vf));

    for (const auto& [term, cin] : s.terms()) {
        for (const auto& [key, tp] : A.terms()) {
            Rat coeff = cin * tp.coeff(0);
            if (coeff == 0) continue;
            std::vector<int> e = term.e;
            // derivative part
            std::map<int, int> rest;
            for (const auto& [v, ex] : term.rest.ve) rest[v] = ex;
            bool dead = false;
            for (const auto& [v, q] : key.der.ve) {
                int f = inv_index[v];
                if (f >= 0) {
                    for (int i = 0; i < q; ++i) {
                        coeff *= e[f];
                        e[f] -= 1;
                    }
                } else {
                    int have = rest.count(v) ? rest[v] : 0;
                    if (have < q) { dead = true; break; }
                    for (int i = 0; i < q; ++i) coeff *= (have - i);
                    rest[v] = have - q;
                }
                if (coeff == 0) { dead = true; break; }
            }
            if (dead) continue;
            for (const auto& [v, p] : key.poly.ve) {
                int f = inv_index[v];
                if (f >= 0) e[f] += p;
                else rest[v] += p;
            }
            SeriesKey outkey;
            outkey.e = std::move(e);
            for (const auto& [v, ex] : rest)
                if (ex > 0) outkey.rest.ve.emplace_back(v, ex);
            out.add_term(outkey, coeff);
        }
    }

    // drop undetermined slots: a slot is undetermined when some operator term
    // pulls from a potential input slot beyond the truncation level
    std::vector<SeriesKey> drop;
    for (const auto& [key, c] : out.terms()) {
        for (const auto& [akey, tp] : A.terms()) {
            // preimage slot = key - poly + der
            std::vector<int> e = key.e;
            std::map<int, int> rest;
            for (const auto& [v, ex] : key.rest.ve) rest[v] = ex;
            bool valid = true;
            for (const auto& [v, p] : akey.poly.ve) {
                int f = inv_index[v];
                if (f >= 0) e[f] -= p;
                else {
                    rest[v] -= p;
                }
            }
            for (const auto& [v, q] : akey.der.ve) {
                int f = inv_index[v];
                if (f >= 0) e[f] += q;
                else rest[v] += q;
            }
            for (const auto& [v, ex] : rest)
                if (ex < 0) valid = false;
            if (!valid) continue;  // not a slot of any series
            // potential shape: per factor, deg_f(rest) == -e_f - 1 >= 0
            std::vector<int> df(s.factors(), 0);
            for (const auto& [v, ex] : rest) df[s.factor_of(v)] += ex;
            bool potential = true;
            int level = 0;
            for (int f = 0; f < nf; ++f) {
                if (df[f] != -e[f] - 1 || df[f] < 0) potential = false;
                level += df[f];
            }
            if (potential && level > s.k_max()) {
                drop.push_back(key);
                break;
            }
        }
    }
    for (const auto& k : drop) {
        // remove by adding the negative
        auto it = out.terms().find(k);
        if (it != out.terms().end()) out.add_term(k, -it->second);
    }
    return out;
}

}  // namespace gkz24
