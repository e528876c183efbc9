#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "riemann/catalog.hpp"
#include "riemann/ranklab.hpp"
#include "riemann/relations.hpp"
#include "riemann/thooft.hpp"

/// JSON documents. Rationals are written as bare integers when integral and
/// as "p/q" strings otherwise; on input both, and integral strings, are
/// accepted. Input errors are InputError with a JSON path such as
/// "$.A_plus[1][2]".
namespace riemann::json_io {

using nlohmann::json;

inline constexpr const char* kSchema = "riemann-syzygy/1";

json rational(const Rational& q);
Rational rational(const json& j, const std::string& path = "$");

json matrix(const Mat3<Rational>& m);
Mat3<Rational> matrix(const json& j, const std::string& path);

/// {"A_plus": 3x3, "A_minus": 3x3, "B": 3x3}
json fblocks(const FBlocks<Rational>& F);
FBlocks<Rational> fblocks(const json& j, const std::string& path = "$");

/// Dense nested 4x4x4x4 arrays, or (sparse) {"sparse": [{"idx": [a,b,c,d], "val": q}]}
/// with 1-based indices; a bare array of such records is also accepted.
json tensor(const Rank4<Rational>& T, bool sparse = false);
Rank4<Rational> tensor(const json& j, const std::string& path = "$");

/// True when the document looks like FBlocks rather than a tensor.
bool is_fblocks(const json& j);

/// {"schema", "seed", "bound", "domain", "samples": [FBlocks...]}
json samples(const std::vector<FBlocks<Rational>>& s, std::uint64_t seed, int bound, Domain domain);
std::vector<FBlocks<Rational>> samples(const json& j);

json values(const IndexedValue<Rational>& v);

json report(const thooft::IdentityReport& rep);
json report(const VerificationReport& rep);
json report(const RankReport& rep, const SampleMatrix& provenance);
json report(const DiscoveryReport& rep, const SampleMatrix& provenance);

/// Parses text, mapping syntax errors to InputError.
json parse(const std::string& text, const std::string& source);

}  // namespace riemann::json_io
