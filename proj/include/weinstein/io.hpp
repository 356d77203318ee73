#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "weinstein/grid.hpp"
#include "weinstein/paley_wiener.hpp"
#include "weinstein/polynomial.hpp"

namespace weinstein {

// SampledFunction schema:
//   {"alpha": a, "d": d,
//    "axes": [{"nodes": [...], "weights": [...], "extent": X, "rule": "gauss-legendre"}, ...],
//    "values": [[re, im], ...],   row-major, last axis fastest
//    "support_radius": R,          optional
//    "label": "..."}
// "extent" and "rule" are optional on input. Doubles are written in shortest
// round-trip form, so write -> read reproduces every bit.

nlohmann::json to_json(const SampledFunction& f);
SampledFunction sampled_from_json(const nlohmann::json& j);

/// "-" means stdout / stdin.
void write_json(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json(const std::string& path);

void write_sampled(const SampledFunction& f, const std::string& path);
SampledFunction read_sampled(const std::string& path);

/// Columns x_1..x_{d+1}, weight, re, im.
void write_csv(const SampledFunction& f, std::ostream& out);

nlohmann::json to_json(const TypeEstimate& e);
nlohmann::json to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const nlohmann::json& j, int dims);

}  // namespace weinstein
