#pragma once

// JSON forms of matrices, decompositions, presentations and reports.
// Keys keep insertion order so output is byte-stable.

#include "asreg/classifier.hpp"
#include "asreg/hopf.hpp"
#include "asreg/special.hpp"
#include "json.hpp"

namespace asreg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Scalar& s, const FieldSpec& f);
/// {"field", "rows", "cols", "entries"}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// [{"type":"jordan","n":3},{"type":"dq","r":1,"q":"2"},{"type":"dq","r":2,"q_minpoly":"x^2-3x+1"}]
Json to_json(const CanonicalDecomposition& d);

/// Coproduct images are lists of [coefficient, left word, right word].
Json to_json(const HopfPresentation& H);
/// Generators, relations and the structure tables; matrix data is not restored.
HopfPresentation presentation_from_json(const Json& j);

Json to_json(const Check& c);
Json to_json(const VerificationReport& r);
Json to_json(const MembershipCertificate& c);
Json to_json(const ClassificationReport& r);
Json to_json(const CrossCheck& c);
/// {case, j, degree, generator, witness_normal_form, exact, status}
Json to_json(const ChainWitness& w);

}  // namespace asreg
