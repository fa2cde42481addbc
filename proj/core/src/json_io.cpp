#include "budgetagg/json_io.hpp"

#include <string>

#include "budgetagg/errors.hpp"

namespace budgetagg {

using nlohmann::json;

json rat_to_json(const Rat& value) {
  if (is_integer(value)) return json(value.numerator());
  return json(to_string(value));
}

Rat rat_from_json(const json& value) {
  if (value.is_number_integer()) return Rat(value.get<std::int64_t>());
  if (value.is_string()) return parse_rat(value.get<std::string>());
  throw InvalidInput("expected an integer or a \"num/den\" string, got " + value.dump());
}

json to_json(const IntegralAllocation& a) { return json(a.vector()); }

json to_json(const FractionalAllocation& a) {
  json out = json::array();
  for (const Rat& x : a) out.push_back(rat_to_json(x));
  return out;
}

namespace {

template <class Profile>
json profile_to_json(const Profile& profile) {
  const auto& inst = profile.instance();
  json votes = json::array();
  for (const auto& v : profile.votes()) votes.push_back(to_json(v));
  return json{{"n", inst.n()}, {"m", inst.m()}, {"b", inst.b()}, {"votes", votes}};
}

int require_int(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InvalidInput(std::string("profile is missing field \"") + key + "\"");
  }
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

const json& require_votes(const json& doc) {
  if (!doc.is_object() || !doc.contains("votes") || !doc.at("votes").is_array()) {
    throw InvalidInput("profile needs a \"votes\" array");
  }
  return doc.at("votes");
}

const json& require_array(const json& doc, std::size_t voter) {
  if (!doc.is_array()) {
    throw InvalidInput("vote of voter " + std::to_string(voter + 1) + " is not an array");
  }
  return doc;
}

template <class Allocation, class Parse>
BasicProfile<Allocation> profile_from(const json& doc, Parse parse) {
  const Instance inst(require_int(doc, "n"), require_int(doc, "m"), require_int(doc, "b"));
  const auto& raw = require_votes(doc);
  std::vector<Allocation> votes;
  votes.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    try {
      votes.push_back(parse(require_array(raw[i], i)));
    } catch (const InvalidInput& e) {
      const std::string msg = e.what();
      if (msg.rfind("vote of voter", 0) == 0) throw;
      throw InvalidInput("vote of voter " + std::to_string(i + 1) + ": " + msg);
    }
  }
  return BasicProfile<Allocation>(inst, std::move(votes));
}

}  // namespace

json to_json(const IntegralProfile& profile) { return profile_to_json(profile); }
json to_json(const FractionalProfile& profile) { return profile_to_json(profile); }

IntegralAllocation integral_allocation_from_json(const json& doc) {
  if (!doc.is_array()) throw InvalidInput("allocation must be a JSON array");
  std::vector<int> amounts;
  for (const auto& x : doc) {
    if (!x.is_number_integer()) {
      throw InvalidInput("integral amounts must be JSON integers, got " + x.dump());
    }
    amounts.push_back(x.get<int>());
  }
  return IntegralAllocation(std::move(amounts));
}

FractionalAllocation fractional_allocation_from_json(const json& doc) {
  if (!doc.is_array()) throw InvalidInput("allocation must be a JSON array");
  std::vector<Rat> amounts;
  for (const auto& x : doc) amounts.push_back(rat_from_json(x));
  return FractionalAllocation(std::move(amounts));
}

IntegralProfile integral_profile_from_json(const json& doc) {
  return profile_from<IntegralAllocation>(doc, integral_allocation_from_json);
}

FractionalProfile fractional_profile_from_json(const json& doc) {
  return profile_from<FractionalAllocation>(doc, fractional_allocation_from_json);
}

std::variant<IntegralProfile, FractionalProfile> profile_from_json(const json& doc) {
  bool integral = true;
  for (const auto& vote : require_votes(doc)) {
    if (!vote.is_array()) continue;
    for (const auto& x : vote) integral = integral && x.is_number_integer();
  }
  if (integral) return integral_profile_from_json(doc);
  return fractional_profile_from_json(doc);
}

}  // namespace budgetagg
