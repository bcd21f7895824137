#pragma once

// Exact rational scalars and coordinate vectors. Every predicate in the
// library is evaluated on these; no floating point enters the core.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sweeprec {

using Scalar = mpq_class;
/// Points and directions share one representation. Directions are never
/// normalized; every predicate is invariant under positive scaling.
using Vector = std::vector<Scalar>;
using VertexId = std::uint32_t;

/// Accepts integers ("-3"), decimals ("1.25", ".5", "2e-3") and fractions ("-3/7").
Scalar parse_scalar(std::string_view text);
/// Canonical text: "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& value);

inline int sign(const Scalar& value) { return sgn(value); }

Scalar dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& factor);
Vector negated(const Vector& v);
/// a + factor * b
Vector axpy(const Vector& a, const Scalar& factor, const Vector& b);
bool is_zero(const Vector& v);

/// Positive rescaling of v to a primitive integer vector (gcd of entries 1).
/// The zero vector is returned unchanged.
Vector primitive(const Vector& v);

/// Subtracts from v its projection onto each vector of an orthogonal basis.
Vector orthogonalize(Vector v, std::span<const Vector> orthogonal_basis);

/// Unnormalized exact Gram-Schmidt; dependent inputs are dropped.
std::vector<Vector> gram_schmidt(std::span<const Vector> vectors);

/// Rank of the row set, by exact elimination.
int rank(std::vector<Vector> rows);

std::string format_vector(const Vector& v);

}  // namespace sweeprec
