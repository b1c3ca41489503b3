#pragma once

#include <string>

#include "json.hpp"

#include "gseed/asymptotics.hpp"
#include "gseed/corpus.hpp"
#include "gseed/criterion.hpp"
#include "gseed/decomposition.hpp"
#include "gseed/linear_forms.hpp"
#include "gseed/series.hpp"
#include "gseed/theta_form.hpp"

namespace gseed {

/* All reports share one discipline: rationals and big integers are decimal
 * strings (exactness survives serialization), floating-point values carry
 * their precision in bits, keys keep insertion order, and nothing
 * time- or host-dependent is ever emitted, so identical runs produce
 * identical bytes.
 */
using Json = nlohmann::ordered_json;

Json json_rational(const Rat& v);
Json json_integer(const Int& v);
Json json_bigfloat(const BigFloat& v);
Json json_complex(const BigComplex& v);
Json json_poly(const RationalPoly& p); /* ascending coefficient strings */

Json report_structure(const std::string& label, const StructureSummary& s);
Json report_coefficients(const std::string& label, CoefficientStream& A, long n);
Json report_decomposition(const std::string& label, const DecompositionRecord& rec,
                          const std::vector<Rat>& residual);
Json report_linear_form(const std::string& label, const LinearFormRecord& rec);
Json report_saddle(const std::string& label, const SaddleReport& rep);
Json report_empirical(const GrowthEstimate& est);
Json report_certificate(const Certificate& cert);
Json report_corpus(const CorpusCheck& check, bool perturb, unsigned seed);

/* Serialize to path, or to stdout when path is empty. */
void write_report(const Json& doc, const std::string& path);

}  // namespace gseed
