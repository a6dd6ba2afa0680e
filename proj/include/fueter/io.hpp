#ifndef FUETER_IO_HPP
#define FUETER_IO_HPP

// Lossless JSON for sections and reports. Rationals travel as "p/q" strings.
//
// Section layout:
//   {"n": 1, "k": 2, "space": "V1",
//    "components": [{"slot": {"ones": 0}, "A": 1,
//                    "terms": [{"alpha": [1,0,0,0], "re": "1/2", "im": "0/1"}]}]}
// "A" is present for V1 and V2, "B" for V2 only. Missing components are zero.

#include "fueter/bergman.hpp"
#include "fueter/canonical.hpp"
#include "fueter/identities.hpp"
#include "fueter/sections.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace fueter {

using Json = nlohmann::ordered_json;

class SectionParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using AnySection = std::variant<Spinor0Field, Spinor1Field, Spinor2Field>;

Json poly_terms_to_json(const Poly& p);

template <Space S>
Json section_to_json(const Section<S>& f);

/// Throws SectionParseError naming the offending component.
AnySection section_from_json(const Json& j);
AnySection section_from_string(const std::string& text);

/// Parses and checks the space.
template <Space S>
Section<S> section_from_json_as(const Json& j) {
    AnySection any = section_from_json(j);
    if (auto* f = std::get_if<Section<S>>(&any)) return std::move(*f);
    throw SectionParseError("expected a " + space_name(S) + " section");
}

Json to_json(const WeightedScalar& w);
Json to_json(const SolveReport& r);
Json to_json(const EstimateReport& r);
Json to_json(const BoundReport& r);
Json to_json(const IdentityCheck& c);

extern template Json section_to_json(const Section<Space::V0>&);
extern template Json section_to_json(const Section<Space::V1>&);
extern template Json section_to_json(const Section<Space::V2>&);

}  // namespace fueter

#endif  // FUETER_IO_HPP
