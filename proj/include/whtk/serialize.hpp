#pragma once

#include <string>

#include <json.hpp>

#include "whtk/fredholm.hpp"
#include "whtk/parse.hpp"
#include "whtk/smith.hpp"
#include "whtk/wh_pipeline.hpp"

namespace whtk {

/// Field order is deterministic everywhere (insertion order), so serialized
/// output is byte-stable.
using Json = nlohmann::ordered_json;

/// Coefficients travel as exact "a/b+c/di" strings, e.g. "-1/2+3i".
std::string coeff_to_string(const GaussianRational& c);
GaussianRational coeff_from_string(const std::string& text);

/// Polynomials are arrays of coefficient strings, ascending powers of z.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"num": [...], "den": [...]}
Json to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const Json& j);

/// Row-major grids.
Json to_json(const MatPoly& a);
MatPoly matpoly_from_json(const Json& j);
Json to_json(const RatMat& a);
RatMat ratmat_from_json(const Json& j);

/// {"size": m, "entries": [[expression strings]]} — the same shape as the
/// input documents, so serialized matrix functions are valid tool input.
Json to_json(const RatMatFun& om);
RatMatFun ratmatfun_from_json(const Json& j);
InputDocument document_from_json(const Json& j);

/// {"k", "Omega_minus", "Omega_circ", "P0", "Omega_plus"}
Json to_json(const WHFactorization& fact);
WHFactorization factorization_from_json(const Json& j);

Json to_json(const FredholmReport& rep);
Json to_json(const SmithDecomposition& s);
Json to_json(const Diag2x2& d);
Json to_json(const PipelineTrace& t);

}  // namespace whtk
