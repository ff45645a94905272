#pragma once

#include <vector>

#include "hypexp/fingerprint.hpp"
#include "hypexp/gauss.hpp"
#include "hypexp/kubert.hpp"
#include "hypexp/rational.hpp"
#include "json.hpp"

namespace hypexp::cli {

using Json = nlohmann::ordered_json;

/// Integers stay integers; other rationals become "a/b" strings.
Json rational_json(const Rational& r);
Json sequence_json(const std::vector<Rational>& seq);

Json criterion_json(const CriterionReport& rep);
Json lemma_json(unsigned r_max, const std::vector<LemmaViolation>& lemma, unsigned corollary_r_max,
                const std::vector<LemmaViolation>& corollary, const std::vector<unsigned>& special);
Json search_json(const SearchReport& rep);
Json identification_json(const IdentificationReport& rep);

/// Parses "0,-2,0" or a JSON array (integers or integral "a/b" strings).
std::vector<i64> parse_sequence(const std::string& text);

}  // namespace hypexp::cli
