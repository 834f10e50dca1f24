#pragma once

#include <string>

#include <json.hpp>

#include "greenring/oracle.hpp"
#include "greenring/radford.hpp"
#include "greenring/radical.hpp"
#include "greenring/stable.hpp"

namespace greenring {

using json = nlohmann::ordered_json;

// Datum files carry either the three arrays (cyclic_orders, chi, g) or the
// shorthand {"radford": {"m": .., "n": ..}}.
GroupDatum datum_from_json(const json& doc);
Datum load_datum_file(const std::string& path);
json datum_to_json(const Datum& d);

json datum_summary_json(const Datum& d);
json basis_json(const GreenRing& ring);
json mul_json(const GreenRing& ring, const RingElement& x, const RingElement& y,
              const RingElement& product);
json table_json(const GreenRing& ring);
json cartan_json(const Grothendieck& g0);
json radical_json(const GreenRing& ring, const PrincipalGeneratorReport& report);
json idempotents_json(const IdempotentSearchReport& report);
json fusion_json(const FusionReport& report);
json fpdim_json(const StableRing& st, double tolerance);
json presentation_json(const RadfordPresentation& pres, const PresentationReport& report);
json g0_presentation_json(const RadfordG0Presentation& pres, const PresentationReport& report);
json oracle_json(const Datum& d, const OracleReport& report);

}  // namespace greenring
