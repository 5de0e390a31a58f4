#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pipcat/coloring.hpp"
#include "pipcat/cubical.hpp"
#include "pipcat/simplicial.hpp"

namespace pipcat {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with exact integer coefficients, lowest
/// degree first and no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    static IntPolynomial from_counts(const std::vector<std::size_t>& counts);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int i) const;

    BigInt evaluate(const BigInt& t) const;
    IntPolynomial derivative() const;
    /// p(t + a), expanded.
    IntPolynomial substitute_shift(const BigInt& a) const;

    /// Ascending degree, e.g. "16 + 24*t + 10*t^2 + t^3".
    std::string to_string(std::string_view var = "t") const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Sparse polynomial in a fixed number of variables; zero terms are never stored.
class MultiPolynomial {
public:
    using Exponents = std::vector<int>;

    explicit MultiPolynomial(int variables = 0) : vars_(variables) {}

    int variable_count() const { return vars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    void add_term(const Exponents& e, const BigInt& c);

    /// x_v -> x_v + a for each v in `vars`.
    MultiPolynomial shift_variables(const std::vector<int>& vars, const BigInt& a) const;
    /// Sets variable v to values[v] for each v in `vars`, dropping those
    /// variables; the others keep their relative order.
    MultiPolynomial substitute(const std::map<int, BigInt>& values) const;
    /// Every variable set to t.
    IntPolynomial to_univariate() const;

    /// Terms in exponent order, e.g. "1 + x1 + 2*x1*y2^2".
    std::string to_string(const std::vector<std::string>& names) const;

    friend MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b);
    friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

private:
    int vars_ = 0;
    std::map<Exponents, BigInt> terms_;
};

/// x1..xr, or x1..xr,y1..yr when `with_y`.
std::vector<std::string> colour_variable_names(int r, bool with_y);

BigInt binomial(int n, int k);

/// Σ f_{i-1} t^i, constant term 1 for the empty face.
IntPolynomial f_poly_simplicial(const SimplicialComplex& k);
/// Σ f_i t^i, constant term the vertex count.
IntPolynomial f_poly_cubical(const CubicalComplex& x);
IntPolynomial f_poly_cubical(const AbstractCubicalComplex& a);
/// Σ over components of rank counts.
IntPolynomial f_poly_derivative(const std::vector<DerivativeComponent>& d);

/// p(-1).
BigInt euler_characteristic(const IntPolynomial& cubical);
/// Σ (-1)^(i-1) i f_i.
BigInt hyperplane_count(const IntPolynomial& cubical);

/// (T v)_i = Σ_j binom(j, i) v_j (0-based).
std::vector<BigInt> transform_T(const std::vector<BigInt>& simplicial);
/// (T^-1 v)_i = Σ_j (-1)^(j-i) binom(j, i) v_j.
std::vector<BigInt> transform_T_inverse(const std::vector<BigInt>& cubical);

/// Σ over faces σ of Π_{v ∈ σ} x_{κ(v)}, in r variables.
MultiPolynomial coloured_f_simplicial(const SimplicialComplex& k, const SimplicialColoring& ks);
/// Σ over faces of Π_{varying coords} x_i Π_{coords constantly 1} y_j, in
/// 2r variables. InvalidColoring when κ_c is not valid.
MultiPolynomial coloured_f_cubical(const std::vector<std::vector<int>>& faces, const CubicalColoring& kc);
MultiPolynomial coloured_f_cubical(const CubicalComplex& x, const CubicalColoring& kc);
MultiPolynomial coloured_f_cubical(const AbstractCubicalComplex& a, const CubicalColoring& kc);

}  // namespace pipcat
