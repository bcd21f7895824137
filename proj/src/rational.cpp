#include "sweeprec/rational.hpp"

#include <cctype>

#include "sweeprec/error.hpp"

namespace sweeprec {

namespace {

bool all_digits(std::string_view s) {
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

[[noreturn]] void bad_scalar(std::string_view text) {
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty() || !all_digits(text)) bad_scalar(whole);
    mpz_class value(std::string(text), 10);
    return negative ? mpz_class(-value) : value;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    const std::string_view whole = text;
    if (text.empty()) bad_scalar(whole);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), whole);
        std::string_view den_text = text.substr(slash + 1);
        if (den_text.empty() || !all_digits(den_text)) bad_scalar(whole);
        mpz_class den(std::string(den_text), 10);
        if (den == 0) bad_scalar(whole);
        Scalar q(num, den);
        q.canonicalize();
        return q;
    }

    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        mpz_class exp_value = parse_integer(exp_text, whole);
        if (!exp_value.fits_slong_p() || abs(exp_value) > 4096) bad_scalar(whole);
        exponent = exp_value.get_si();
        text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
        int_part = text.substr(0, dot_pos);
        frac_part = text.substr(dot_pos + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_scalar(whole);
    if (!all_digits(int_part) || !all_digits(frac_part)) bad_scalar(whole);

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Scalar q = exponent < 0 ? Scalar(num, scale) : Scalar(num * scale);
    q.canonicalize();
    return negative ? Scalar(-q) : q;
}

std::string format_scalar(const Scalar& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar dot(const Vector& a, const Vector& b) {
    Scalar sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

Vector add(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector sub(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector scaled(const Vector& v, const Scalar& factor) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
    return out;
}

Vector negated(const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

Vector axpy(const Vector& a, const Scalar& factor, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + factor * b[i];
    return out;
}

bool is_zero(const Vector& v) {
    for (const Scalar& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

Vector primitive(const Vector& v) {
    if (is_zero(v)) return v;
    mpz_class den_lcm = 1;
    for (const Scalar& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints(v.size());
    mpz_class num_gcd = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (den_lcm / v[i].get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints[i].get_mpz_t());
    }
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(ints[i] / num_gcd);
    return out;
}

Vector orthogonalize(Vector v, std::span<const Vector> orthogonal_basis) {
    for (const Vector& b : orthogonal_basis) {
        Scalar bb = dot(b, b);
        if (sgn(bb) == 0) continue;
        Scalar coeff = dot(v, b) / bb;
        if (sgn(coeff) != 0) v = axpy(v, -coeff, b);
    }
    return v;
}

std::vector<Vector> gram_schmidt(std::span<const Vector> vectors) {
    std::vector<Vector> basis;
    for (const Vector& v : vectors) {
        Vector r = primitive(orthogonalize(v, basis));
        if (!is_zero(r)) basis.push_back(std::move(r));
    }
    return basis;
}

int rank(std::vector<Vector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    int r = 0;
    for (std::size_t col = 0; col < cols && r < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) == 0) continue;
            Scalar f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::string format_vector(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_scalar(v[i]);
    }
    return out + ")";
}

}  // namespace sweeprec
