// Exact multivariate Laurent polynomials over Z, subtraction-free rational
// expressions, and their piecewise-linear tropical shadows. This is the value
// type every other module computes with.
#pragma once

#include <clusterx/arith.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace clusterx {

// Natural ordering for variable names: "X2" < "X10".
bool natural_less(const std::string& a, const std::string& b);

/// Laurent polynomial with Int coefficients. Canonical form: variables that
/// occur with exponent 0 in every term are dropped, the remaining ones are
/// sorted naturally, terms are keyed by exponent tuple, no coefficient is 0.
/// Equality is structural.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Int>;

    LaurentPoly() = default;  // zero
    explicit LaurentPoly(const Int& constant);
    explicit LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly variable(const std::string& name, int exponent = 1);
    static LaurentPoly monomial(const std::vector<std::string>& vars,
                                const Exponents& exps, const Int& coef);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool all_positive() const;  // every coefficient > 0
    std::size_t term_count() const { return terms_.size(); }
    Int max_abs_coef() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(long e) const;  // e < 0 needs a monomial base

    /// gcd of |coefficients| (0 for the zero polynomial).
    Int content() const;
    /// componentwise min of exponents over all terms; zero tuple if constant.
    Exponents min_exponents() const;

    /// multiply by coef * X^shift (shift aligned to this->vars()).
    LaurentPoly shifted(const Exponents& shift, const Int& coef = Int(1)) const;

    /// exact value at a point; negative exponents require nonzero coordinates.
    Rat eval(const std::map<std::string, Rat>& point) const;

    /// canonical text form, terms by ascending exponent tuple: "-1*X1^-1*X2^2 + 3"
    std::string to_text() const;

    // rebuild with explicit data (normalizes: drops zeros, trims vars)
    static LaurentPoly make(std::vector<std::string> vars, TermMap terms);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void normalize();
    friend std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly&,
                                                       const LaurentPoly&);
};

/// Remap both polynomials to the union of their variable sets.
std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly& a,
                                            const LaurentPoly& b);

/// If d divides n exactly in the Laurent ring, return the quotient.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& n,
                                        const LaurentPoly& d);

/// Ratio of Laurent polynomials, normalized by monomial and integer content.
/// Subtraction-free presentations (all coefficients of num and den positive)
/// are preserved by the arithmetic; tropicalize requires one.
class PosRational {
public:
    PosRational() : num_(Int(0)), den_(Int(1)) {}
    explicit PosRational(LaurentPoly num) : PosRational(std::move(num), LaurentPoly(Int(1))) {}
    PosRational(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_subtraction_free() const {
        return (num_.is_zero() || num_.all_positive()) && den_.all_positive();
    }

    PosRational operator+(const PosRational& o) const;
    PosRational operator*(const PosRational& o) const;
    PosRational operator/(const PosRational& o) const;
    PosRational inverse() const;
    PosRational pow(long e) const;

    /// equality as rational functions (cross multiplication)
    bool equals(const PosRational& o) const;
    /// true iff this equals the single variable `name`
    bool is_variable(const std::string& name) const;

    Rat eval(const std::map<std::string, Rat>& point) const;

    std::optional<LaurentPoly> as_laurent() const;  // den | num ?

    std::string to_text() const;

private:
    LaurentPoly num_, den_;
};

/// Substitute a rational expression for every variable of f.
PosRational substitute(const LaurentPoly& f,
                       const std::map<std::string, PosRational>& images);
PosRational substitute(const PosRational& f,
                       const std::map<std::string, PosRational>& images);

/// Piecewise-linear expression over named variables: constants, integral
/// linear forms, +, integer scaling, max, min. Positively homogeneous when
/// all constants are zero.
class TropExpr {
public:
    static TropExpr constant(const Rat& c);
    static TropExpr linear(std::map<std::string, Int> coeffs);
    static TropExpr sum(std::vector<TropExpr> kids);
    static TropExpr max_of(std::vector<TropExpr> kids);
    static TropExpr min_of(std::vector<TropExpr> kids);
    static TropExpr scale(const Int& k, TropExpr e);
    static TropExpr neg(TropExpr e) { return scale(Int(-1), std::move(e)); }

    Rat eval(const std::map<std::string, Rat>& point) const;
    std::string to_string() const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

/// Tropicalization of a subtraction-free expression: + -> max, * -> +,
/// / -> -, monomial X^a -> <a,x>, coefficients -> 0.
TropExpr tropicalize(const PosRational& f);
TropExpr tropicalize(const LaurentPoly& positive_poly);

/// log f(e^{C x_1}, ...) / C for each C, accumulated in log space.
std::vector<double> numeric_limit_check(const PosRational& f,
                                        const std::map<std::string, Rat>& x,
                                        const std::vector<double>& Cs);

/// Parse the canonical text form (signed integer coefficients, *, ^, parens,
/// and at most one top-level '/').
LaurentPoly parse_laurent(const std::string& text);
PosRational parse_pos_rational(const std::string& text);

}  // namespace clusterx
