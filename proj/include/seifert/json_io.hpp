#pragma once

#include "seifert/alexander.hpp"
#include "seifert/lattice.hpp"
#include "seifert/plumbing.hpp"
#include "seifert/seifert_data.hpp"
#include "seifert/surgery.hpp"

#include <json.hpp>

namespace seifert {

using ordered_json = nlohmann::ordered_json;

// Ints that fit in 64 bits become JSON numbers, anything larger a
// decimal string.
ordered_json int_json(const Int& v);

ordered_json to_json(const SeifertInvariants& inv, int sign = +1);
ordered_json to_json(const OrientedSeifert& y);
ordered_json to_json(const PlumbingGraph& g);
ordered_json lattice_json(const GramLattice& L);
ordered_json to_json(const IntegerPolynomial& p);
ordered_json to_json(const FoxMilnorResult& r);
ordered_json to_json(const WitnessReport& w);
ordered_json to_json(const DSurvey& s);

}  // namespace seifert
