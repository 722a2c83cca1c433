#include "apery/report.hpp"

#include <cstdio>

namespace apery {

namespace {

Json sides(const std::vector<std::string>& v) {
  if (v.size() == 1) return v.front();
  return Json(v);
}

}  // namespace

Json to_json(const IdentityReport& r) {
  Json j;
  j["semigroup"] = r.gaps ? Json{{"gaps", *r.gaps}} : Json(nullptr);
  j["m"] = r.m ? Json(*r.m) : Json(nullptr);
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["lhs"] = sides(r.lhs);
  j["rhs"] = sides(r.rhs);
  j["equal"] = r.equal;
  j["residual"] = r.residual ? Json(*r.residual) : Json(nullptr);
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

void set_exact_sides(IdentityReport& r, std::span<const Rational> lhs, std::span<const Rational> rhs) {
  r.lhs = to_strings(lhs);
  r.rhs = to_strings(rhs);
  r.equal = lhs.size() == rhs.size() && std::equal(lhs.begin(), lhs.end(), rhs.begin());
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace apery
