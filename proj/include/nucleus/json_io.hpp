// JSON formats for categories, functors, natural transformations,
// adjunctions and monads, plus law-report serialization and a DOT
// emitter for small categories.
//
// Category JSON: {"objects": [...],
//                 "morphisms": [{"name","dom","cod"}...],
//                 "composition": [{"first","then","equals"}...]}
// Identity morphisms named "id:<object>" may be omitted (synthesized),
// as may composition entries involving identities. An optional
// "identities": {object: morphism} designates identities with other
// names; emitted categories always carry it.

#pragma once

#include <iosfwd>
#include <string>

#include "nucleus/adjunction.hpp"
#include "nucleus/fincat.hpp"

namespace nucio {

fincat::CatPtr category_from_json(const std::string& text);
std::string category_to_json(const fincat::Category& c);

// A bundle holds named categories plus optionally one adjunction and/or
// one monad referring to them.
struct Bundle {
  std::vector<std::pair<std::string, fincat::CatPtr>> categories;
  std::optional<nuc::Adjunction> adjunction;
  std::optional<nuc::Monad> monad;

  fincat::CatPtr category(const std::string& name) const;
};

Bundle parse_bundle(std::istream& in);

std::string report_to_json(const fincat::Report& rep);
std::string category_dot(const fincat::Category& c);
std::string adjunction_to_json(const nuc::Adjunction& a, const std::string& a_name, const std::string& b_name);

}  // namespace nucio
