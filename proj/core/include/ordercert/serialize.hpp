#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ordercert/derivation.hpp"
#include "ordercert/sign_search.hpp"
#include "ordercert/skew.hpp"

namespace ordercert {

using Json = nlohmann::json;

/// Malformed certificate or payload.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rationals are strings "p/q" in lowest terms, "p" for integers. PL maps and
// cocycles are lists of [x, y] pairs. Words are FreeWord::str() strings.
Json to_json(const Rational& r);
Json to_json(const PLMap& m);
Json to_json(const PLCocycle& c);
Json to_json(const SkewElement& g);
Json to_json(const RelationReport& r);
Json to_json(const FreeWord& w);
Json to_json(const Judgment& j);
Json to_json(const Fact& f);
Json to_json(const Step& s);
Json to_json(const Split& s);
Json to_json(const Branch& b);
Json to_json(const Derivation& d);
Json to_json(const NonLOWitness& w);

// Each throws CertificateError on malformed input.
Rational rational_from_json(const Json& j);
PLMap pl_map_from_json(const Json& j);
PLCocycle pl_cocycle_from_json(const Json& j);
SkewElement skew_from_json(const Json& j);
RelationReport relation_report_from_json(const Json& j);
FreeWord word_from_json(const Json& j);
Judgment judgment_from_json(const Json& j);
Fact fact_from_json(const Json& j);
Step step_from_json(const Json& j);
Split split_from_json(const Json& j);
Branch branch_from_json(const Json& j);
Derivation derivation_from_json(const Json& j);
NonLOWitness witness_from_json(const Json& j);

enum class CertificateKind { RelationReport, Derivation, NonLOWitness };

std::string_view certificate_kind_name(CertificateKind k);
std::optional<CertificateKind> parse_certificate_kind(std::string_view s);

inline constexpr std::string_view kCertificateVersion = "1";
inline constexpr std::string_view kToolName = "ordercert 1.0.0";

struct Certificate {
  std::string version{kCertificateVersion};
  CertificateKind kind = CertificateKind::Derivation;
  Json payload;
  std::string tool{kToolName};
  std::optional<std::string> timestamp;  // UTC, ISO 8601
};

/// Certificate stamped with the current UTC time when `timestamp` is set.
Certificate make_certificate(CertificateKind kind, Json payload, bool timestamp = true);

/// Canonical bytes: sorted keys, no insignificant whitespace, one trailing
/// newline.
std::string dump_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

}  // namespace ordercert
