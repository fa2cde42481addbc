#include "budgetagg_cli/mechanism_ids.hpp"

#include "budgetagg/errors.hpp"
#include "budgetagg/integral_phantoms.hpp"
#include "budgetagg/phantom_system.hpp"

namespace budgetagg::cli {

bool is_fractional_id(const std::string& id) { return id == "im" || id == "utilitarian"; }

FractionalMechanism fractional_mechanism(const std::string& id) {
  if (id == "im") return independent_markets_mechanism;
  if (id == "utilitarian") return utilitarian_mechanism;
  throw UnknownId("unknown fractional mechanism '" + id + "' (expected im or utilitarian)");
}

ApportionmentMethod apportionment_method(const std::string& id) {
  if (id == "hamilton") return hamilton;
  if (id == "quota") return quota_method;
  if (id.rfind("divisor:", 0) == 0) {
    Rat delta;
    try {
      delta = parse_rat(id.substr(8));
    } catch (const InvalidInput&) {
      throw UnknownId("bad divisor parameter in '" + id + "'");
    }
    if (delta <= 0 || delta > 1) throw UnknownId("divisor parameter must lie in (0, 1]: '" + id + "'");
    return [delta](const FractionalAllocation& a) { return stationary_divisor(a, delta); };
  }
  throw UnknownId("unknown apportionment method '" + id +
                  "' (expected hamilton, quota or divisor:<delta>)");
}

TieBreakPolicy tie_break_policy(const std::string& id) {
  if (id == "index") return TieBreakPolicy::ByAlternativeIndex;
  if (id == "larger-input") return TieBreakPolicy::ByLargerInput;
  if (id == "lex") return TieBreakPolicy::Lexicographic;
  throw UnknownId("unknown tie-break '" + id + "' (expected index, larger-input or lex)");
}

IntegralMechanism integral_mechanism(const std::string& id) {
  if (id == "floor-im") return floor_im;
  if (id == "floor-util") return floor_util;
  if (id == "ceiling-im") return ceiling_im;
  if (id == "constant") {
    return [](const IntegralProfile& p) {
      std::vector<int> x(p.instance().m(), 0);
      x[0] = p.instance().b();
      return IntegralAllocation(std::move(x));
    };
  }
  if (id == "first-vote") return [](const IntegralProfile& p) { return p.vote(0); };
  if (id.rfind("compose:", 0) == 0) {
    const auto body = id.substr(8);
    const auto first = body.find('+');
    const auto second = first == std::string::npos ? first : body.find('+', first + 1);
    if (second == std::string::npos) {
      throw UnknownId("compose ids look like compose:im+hamilton+index, got '" + id + "'");
    }
    return compose(fractional_mechanism(body.substr(0, first)),
                   apportionment_method(body.substr(first + 1, second - first - 1)),
                   tie_break_policy(body.substr(second + 1)));
  }
  throw UnknownId("unknown mechanism '" + id + "'");
}

}  // namespace budgetagg::cli
