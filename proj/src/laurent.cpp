#include <clusterx/laurent.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clusterx {

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) &&
            std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
            // strip leading zeros for numeric compare
            na.erase(0, std::min(na.find_first_not_of('0'), na.size() - 1));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size() - 1));
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

LaurentPoly::LaurentPoly(const Int& constant) {
    if (constant != 0) terms_[{}] = constant;
}

LaurentPoly LaurentPoly::variable(const std::string& name, int exponent) {
    LaurentPoly p;
    p.vars_ = {name};
    p.terms_[{exponent}] = 1;
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& vars,
                                  const Exponents& exps, const Int& coef) {
    if (vars.size() != exps.size())
        throw std::invalid_argument("monomial: vars/exps size mismatch");
    LaurentPoly p;
    p.vars_ = vars;
    if (coef != 0) p.terms_[exps] = coef;
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::make(std::vector<std::string> vars, TermMap terms) {
    LaurentPoly p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](int e) { return e == 0; });
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::all_positive() const {
    if (terms_.empty()) return false;
    for (const auto& [e, c] : terms_)
        if (c <= 0) return false;
    return true;
}

Int LaurentPoly::max_abs_coef() const {
    Int m = 0;
    for (const auto& [e, c] : terms_) {
        Int a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

void LaurentPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    // drop variables unused by every term
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
        if (e.size() != vars_.size())
            throw std::logic_error("LaurentPoly: exponent arity mismatch");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    }
    bool sorted = std::is_sorted(vars_.begin(), vars_.end(), natural_less);
    bool all_used = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    if (sorted && all_used) return;

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) keep.push_back(i);
    std::sort(keep.begin(), keep.end(), [&](std::size_t x, std::size_t y) {
        return natural_less(vars_[x], vars_[y]);
    });
    std::vector<std::string> nv;
    nv.reserve(keep.size());
    for (std::size_t i : keep) nv.push_back(vars_[i]);
    TermMap nt;
    for (auto& [e, c] : terms_) {
        Exponents ne(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
        auto [it, fresh] = nt.emplace(std::move(ne), c);
        if (!fresh) throw std::logic_error("LaurentPoly: duplicate vars");
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly& a,
                                            const LaurentPoly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    std::set<std::string> names(a.vars_.begin(), a.vars_.end());
    names.insert(b.vars_.begin(), b.vars_.end());
    std::vector<std::string> merged(names.begin(), names.end());
    std::sort(merged.begin(), merged.end(), natural_less);

    auto remap = [&](const LaurentPoly& p) {
        std::vector<int> where(merged.size(), -1);
        for (std::size_t i = 0; i < p.vars_.size(); ++i) {
            auto it = std::find(merged.begin(), merged.end(), p.vars_[i]);
            where[i] = static_cast<int>(it - merged.begin());
        }
        LaurentPoly q;
        q.vars_ = merged;
        for (const auto& [e, c] : p.terms_) {
            LaurentPoly::Exponents ne(merged.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
            q.terms_[ne] = c;
        }
        return q;
    };
    return {remap(a), remap(b)};
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    auto [a, b] = aligned(*this, o);
    for (const auto& [e, c] : b.terms_) {
        auto [it, fresh] = a.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    a.normalize();
    return a;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    auto [a, b] = aligned(*this, o);
    LaurentPoly r;
    r.vars_ = a.vars_;
    const std::size_t nv = a.vars_.size();
    Exponents e(nv);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = r.terms_.emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e == 0) return LaurentPoly(Int(1));
    if (e < 0) {
        if (!is_monomial())
            throw std::invalid_argument("pow: negative exponent on non-monomial");
        const auto& [exp, coef] = *terms_.begin();
        if (coef != 1 && coef != -1)
            throw std::invalid_argument("pow: negative exponent needs unit coefficient");
        Exponents inv(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i) inv[i] = -exp[i];
        LaurentPoly r(Int(1));
        for (long i = 0; i < -e; ++i) r = r * monomial(vars_, inv, coef);
        return r;
    }
    LaurentPoly r(Int(1));
    LaurentPoly base = *this;
    long k = e;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        Int a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
    Exponents m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift, const Int& coef) const {
    if (shift.size() != vars_.size())
        throw std::invalid_argument("shifted: arity mismatch");
    LaurentPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        Exponents ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] + shift[i];
        r.terms_[ne] = c * coef;
    }
    r.normalize();
    return r;
}

Rat LaurentPoly::eval(const std::map<std::string, Rat>& point) const {
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw std::invalid_argument("eval: missing value for " + vars_[i]);
            Rat v = it->second;
            if (v == 0 && e[i] < 0) throw std::domain_error("eval: zero base, negative exponent");
            Rat p(1);
            int k = std::abs(e[i]);
            for (int j = 0; j < k; ++j) p *= v;
            if (e[i] < 0) p = Rat(1) / p;
            term *= p;
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

std::string LaurentPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        out << c.get_str();
        if (any_var) {
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                out << "*" << vars_[i];
                if (e[i] != 1) out << "^" << e[i];
            }
        }
    }
    return out.str();
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& n, const LaurentPoly& d) {
    if (d.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    if (n.is_zero()) return LaurentPoly();
    auto [a, b] = aligned(n, d);
    const std::size_t nv = a.vars().size();
    // shift both to ordinary polynomials; track the monomial correction
    auto ma = a.min_exponents();
    auto mb = b.min_exponents();
    using Exps = LaurentPoly::Exponents;
    LaurentPoly::TermMap R, D;
    for (const auto& [e, c] : a.terms()) {
        Exps ne(nv);
        for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] - ma[i];
        R[ne] = c;
    }
    for (const auto& [e, c] : b.terms()) {
        Exps ne(nv);
        for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] - mb[i];
        D[ne] = c;
    }
    // lex division by the single divisor; exactness forces every leading
    // term of the remainder to be divisible by LT(D)
    const auto& ltd_e = std::prev(D.end())->first;
    const Int& ltd_c = std::prev(D.end())->second;
    LaurentPoly::TermMap Q;
    Exps qe(nv), me(nv);
    while (!R.empty()) {
        auto ltr = std::prev(R.end());
        for (std::size_t i = 0; i < nv; ++i) {
            qe[i] = ltr->first[i] - ltd_e[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Int qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), ltr->second.get_mpz_t(),
                    ltd_c.get_mpz_t());
        if (rem != 0) return std::nullopt;
        Q[qe] += qc;
        for (const auto& [e, c] : D) {
            for (std::size_t i = 0; i < nv; ++i) me[i] = e[i] + qe[i];
            auto it = R.find(me);
            if (it == R.end()) {
                R.emplace(me, -qc * c);
            } else {
                it->second -= qc * c;
                if (it->second == 0) R.erase(it);
            }
        }
    }
    // undo the shift: multiply by X^(ma - mb)
    LaurentPoly::TermMap shifted;
    for (auto& [e, c] : Q) {
        Exps ne(nv);
        for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] + ma[i] - mb[i];
        shifted.emplace(std::move(ne), std::move(c));
    }
    return LaurentPoly::make(a.vars(), std::move(shifted));
}

PosRational::PosRational(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("PosRational: zero denominator");
    auto [n, d] = aligned(num_, den_);
    // normalize the monomial content onto the numerator: shift so that the
    // denominator has minimal exponent 0 in every variable (a monomial
    // denominator becomes a constant), and strip the integer content
    auto md = d.min_exponents();
    LaurentPoly::Exponents shift(md.size());
    bool nz = n.is_zero();
    for (std::size_t i = 0; i < md.size(); ++i) shift[i] = -md[i];
    Int g = nz ? d.content() : Int(0);
    if (!nz) {
        Int cn = n.content(), cd = d.content();
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    }
    if (g == 0) g = 1;
    // make the lex-least denominator coefficient positive
    Int sign = d.terms().begin()->second > 0 ? 1 : -1;
    num_ = LaurentPoly();
    den_ = LaurentPoly();
    {
        LaurentPoly::TermMap tn, td;
        for (const auto& [e, c] : n.terms()) {
            LaurentPoly::Exponents ne(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] + shift[i];
            tn[ne] = c * sign / g;
        }
        for (const auto& [e, c] : d.terms()) {
            LaurentPoly::Exponents ne(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] + shift[i];
            td[ne] = c * sign / g;
        }
        num_ = LaurentPoly::make(n.vars(), std::move(tn));
        den_ = LaurentPoly::make(d.vars(), std::move(td));
    }
}

PosRational PosRational::operator+(const PosRational& o) const {
    return PosRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

PosRational PosRational::operator*(const PosRational& o) const {
    return PosRational(num_ * o.num_, den_ * o.den_);
}

PosRational PosRational::operator/(const PosRational& o) const {
    if (o.num_.is_zero()) throw std::domain_error("PosRational: division by zero");
    return PosRational(num_ * o.den_, den_ * o.num_);
}

PosRational PosRational::inverse() const {
    if (num_.is_zero()) throw std::domain_error("PosRational: inverse of zero");
    return PosRational(den_, num_);
}

PosRational PosRational::pow(long e) const {
    if (e == 0) return PosRational(LaurentPoly(Int(1)));
    PosRational base = e < 0 ? inverse() : *this;
    long k = e < 0 ? -e : e;
    PosRational r(LaurentPoly(Int(1)));
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

bool PosRational::equals(const PosRational& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

bool PosRational::is_variable(const std::string& name) const {
    return equals(PosRational(LaurentPoly::variable(name)));
}

Rat PosRational::eval(const std::map<std::string, Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw std::domain_error("PosRational::eval: denominator vanishes");
    Rat r = num_.eval(point) / d;
    r.canonicalize();
    return r;
}

std::optional<LaurentPoly> PosRational::as_laurent() const {
    return divide_exact(num_, den_);
}

std::string PosRational::to_text() const {
    if (den_.is_one()) return num_.to_text();
    return "(" + num_.to_text() + ") / (" + den_.to_text() + ")";
}

PosRational substitute(const LaurentPoly& f,
                       const std::map<std::string, PosRational>& images) {
    const auto& vars = f.vars();
    std::vector<const PosRational*> img(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = images.find(vars[i]);
        if (it == images.end())
            throw std::invalid_argument("substitute: no image for " + vars[i]);
        img[i] = &it->second;
    }
    // term-wise: X_i -> N_i/D_i with a common denominator prod N_i^{M_i} D_i^{P_i}
    std::vector<int> P(vars.size(), 0), M(vars.size(), 0);
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i) {
            P[i] = std::max(P[i], e[i]);
            M[i] = std::max(M[i], -e[i]);
        }
    LaurentPoly den(Int(1));
    for (std::size_t i = 0; i < vars.size(); ++i)
        den = den * img[i]->num().pow(M[i]) * img[i]->den().pow(P[i]);
    LaurentPoly num;
    for (const auto& [e, c] : f.terms()) {
        LaurentPoly t((Int(c)));
        for (std::size_t i = 0; i < e.size(); ++i) {
            t = t * img[i]->num().pow(e[i] + M[i]);
            t = t * img[i]->den().pow(P[i] - e[i]);
        }
        num = num + t;
    }
    return PosRational(std::move(num), std::move(den));
}

PosRational substitute(const PosRational& f,
                       const std::map<std::string, PosRational>& images) {
    PosRational n = substitute(f.num(), images);
    PosRational d = substitute(f.den(), images);
    return n / d;
}

// ---------------------------------------------------------------- TropExpr

struct TropExpr::Node {
    enum class Kind { constant, linear, sum, max, min, scale } kind;
    Rat c;
    std::map<std::string, Int> lin;
    Int k;
    std::vector<TropExpr> kids;
};

TropExpr TropExpr::constant(const Rat& c) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::constant;
    n->c = c;
    TropExpr e;
    e.node_ = n;
    return e;
}

TropExpr TropExpr::linear(std::map<std::string, Int> coeffs) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::linear;
    n->lin = std::move(coeffs);
    TropExpr e;
    e.node_ = n;
    return e;
}

TropExpr TropExpr::sum(std::vector<TropExpr> kids) {
    if (kids.size() == 1) return kids[0];
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::sum;
    n->kids = std::move(kids);
    TropExpr e;
    e.node_ = n;
    return e;
}

TropExpr TropExpr::max_of(std::vector<TropExpr> kids) {
    if (kids.empty()) throw std::invalid_argument("max_of: empty");
    if (kids.size() == 1) return kids[0];
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::max;
    n->kids = std::move(kids);
    TropExpr e;
    e.node_ = n;
    return e;
}

TropExpr TropExpr::min_of(std::vector<TropExpr> kids) {
    if (kids.empty()) throw std::invalid_argument("min_of: empty");
    if (kids.size() == 1) return kids[0];
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::min;
    n->kids = std::move(kids);
    TropExpr e;
    e.node_ = n;
    return e;
}

TropExpr TropExpr::scale(const Int& k, TropExpr e) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::scale;
    n->k = k;
    n->kids = {std::move(e)};
    TropExpr r;
    r.node_ = n;
    return r;
}

Rat TropExpr::eval(const std::map<std::string, Rat>& point) const {
    if (!node_) throw std::logic_error("TropExpr: empty");
    const Node& n = *node_;
    switch (n.kind) {
        case Node::Kind::constant:
            return n.c;
        case Node::Kind::linear: {
            Rat s(0);
            for (const auto& [v, a] : n.lin) {
                auto it = point.find(v);
                if (it == point.end())
                    throw std::invalid_argument("TropExpr::eval: missing " + v);
                s += Rat(a) * it->second;
            }
            s.canonicalize();
            return s;
        }
        case Node::Kind::sum: {
            Rat s(0);
            for (const auto& k : n.kids) s += k.eval(point);
            s.canonicalize();
            return s;
        }
        case Node::Kind::max: {
            Rat m = n.kids.front().eval(point);
            for (std::size_t i = 1; i < n.kids.size(); ++i)
                m = std::max(m, n.kids[i].eval(point));
            return m;
        }
        case Node::Kind::min: {
            Rat m = n.kids.front().eval(point);
            for (std::size_t i = 1; i < n.kids.size(); ++i)
                m = std::min(m, n.kids[i].eval(point));
            return m;
        }
        case Node::Kind::scale: {
            Rat s = Rat(n.k) * n.kids.front().eval(point);
            s.canonicalize();
            return s;
        }
    }
    throw std::logic_error("TropExpr: bad kind");
}

std::string TropExpr::to_string() const {
    if (!node_) return "?";
    const Node& n = *node_;
    auto join = [&](const char* name) {
        std::string s = name;
        s += "(";
        for (std::size_t i = 0; i < n.kids.size(); ++i) {
            if (i) s += ", ";
            s += n.kids[i].to_string();
        }
        return s + ")";
    };
    switch (n.kind) {
        case Node::Kind::constant:
            return clusterx::to_string(n.c);
        case Node::Kind::linear: {
            if (n.lin.empty()) return "0";
            std::string s;
            bool first = true;
            for (const auto& [v, a] : n.lin) {
                if (a == 0) continue;
                if (!first) s += " + ";
                first = false;
                if (a != 1) s += a.get_str() + "*";
                s += v;
            }
            return s.empty() ? "0" : s;
        }
        case Node::Kind::sum:
            return join("sum");
        case Node::Kind::max:
            return join("max");
        case Node::Kind::min:
            return join("min");
        case Node::Kind::scale:
            return n.k.get_str() + "*(" + n.kids.front().to_string() + ")";
    }
    return "?";
}

TropExpr tropicalize(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("tropicalize: zero polynomial");
    if (!p.all_positive())
        throw std::invalid_argument("tropicalize: not subtraction-free");
    std::vector<TropExpr> forms;
    for (const auto& [e, c] : p.terms()) {
        std::map<std::string, Int> lin;
        for (std::size_t i = 0; i < p.vars().size(); ++i)
            if (e[i] != 0) lin[p.vars()[i]] = e[i];
        forms.push_back(TropExpr::linear(std::move(lin)));
    }
    return TropExpr::max_of(std::move(forms));
}

TropExpr tropicalize(const PosRational& f) {
    if (!f.is_subtraction_free())
        throw std::invalid_argument("tropicalize: not subtraction-free");
    TropExpr tn = tropicalize(f.num());
    if (f.den().is_constant()) return tn;
    return TropExpr::sum({tn, TropExpr::neg(tropicalize(f.den()))});
}

static double log_poly_at(const LaurentPoly& p, const std::map<std::string, Rat>& x,
                          double C) {
    // log sum exp over terms of (log c + C * <a, x>)
    double best = -1e300;
    std::vector<double> vals;
    vals.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) {
        double v = std::log(mpz_get_d(Int(c).get_mpz_t()));
        for (std::size_t i = 0; i < p.vars().size(); ++i) {
            if (e[i] == 0) continue;
            v += C * e[i] * to_double(x.at(p.vars()[i]));
        }
        vals.push_back(v);
        best = std::max(best, v);
    }
    double acc = 0;
    for (double v : vals) acc += std::exp(v - best);
    return best + std::log(acc);
}

std::vector<double> numeric_limit_check(const PosRational& f,
                                        const std::map<std::string, Rat>& x,
                                        const std::vector<double>& Cs) {
    if (!f.is_subtraction_free())
        throw std::invalid_argument("numeric_limit_check: not subtraction-free");
    std::vector<double> out;
    out.reserve(Cs.size());
    for (double C : Cs) {
        if (C <= 0) throw std::invalid_argument("numeric_limit_check: C must be positive");
        double v = log_poly_at(f.num(), x, C);
        if (!f.den().is_one()) v -= log_poly_at(f.den(), x, C);
        out.push_back(v / C);
    }
    return out;
}

// ------------------------------------------------------------------ parser

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("parse: expected integer");
        return Int(s.substr(start, pos - start));
    }

    long parse_exponent() {
        Int e = parse_int();
        return mpz_get_si(e.get_mpz_t());
    }

    LaurentPoly parse_base() {
        skip_ws();
        if (eat('(')) {
            LaurentPoly p = parse_expr();
            if (!eat(')')) throw std::invalid_argument("parse: missing ')'");
            return p;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return LaurentPoly(parse_int());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return LaurentPoly::variable(s.substr(start, pos - start));
        }
        throw std::invalid_argument("parse: unexpected character");
    }

    LaurentPoly parse_factor() {
        LaurentPoly b = parse_base();
        if (eat('^')) return b.pow(parse_exponent());
        return b;
    }

    LaurentPoly parse_term() {
        LaurentPoly p = parse_factor();
        while (eat('*')) p = p * parse_factor();
        return p;
    }

    LaurentPoly parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly p = parse_term();
        if (neg) p = -p;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                p = p + parse_term();
            } else if (c == '-') {
                ++pos;
                p = p - parse_term();
            } else {
                break;
            }
        }
        return p;
    }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
    Parser p(text);
    LaurentPoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw std::invalid_argument("parse: trailing input");
    return r;
}

PosRational parse_pos_rational(const std::string& text) {
    // split at a top-level '/', if any
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            return PosRational(parse_laurent(text.substr(0, i)),
                               parse_laurent(text.substr(i + 1)));
        }
    }
    return PosRational(parse_laurent(text));
}

}  // namespace clusterx
