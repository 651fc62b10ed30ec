#pragma once

#include <nlohmann/json.hpp>

#include "onerel/criteria.hpp"
#include "onerel/embed.hpp"
#include "onerel/hull.hpp"
#include "onerel/magnus.hpp"
#include "onerel/walk.hpp"

// JSON shapes used by the CLI and the python module. Exact rationals are
// emitted as [numerator, denominator] integer pairs.

namespace onerel {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
json to_json(const BigInt& v);
json to_json(const Word& w);
json to_json(const Walk& w);
json to_json(const ZeroCell& c);
json to_json(const HullReport& r);
json to_json(const TouchingCertificate& c);
json to_json(const BrownWitness& w);
json to_json(const Verdict& v);
json to_json(const IndexedWord& iw);
json to_json(const WordFamily& f);
json to_json(const EmbeddingWitness& w);
json to_json(const Presentation& p);

}  // namespace onerel
