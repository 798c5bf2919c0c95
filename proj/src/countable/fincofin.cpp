// SPDX-License-Identifier: Apache-2.0

#include "maxitive/countable/fincofin.hpp"

#include <algorithm>
#include <iterator>

namespace maxitive::countable {

namespace {

using Support = std::vector<Natural>;

Support set_union(const Support& a, const Support& b) {
  Support out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support set_intersection(const Support& a, const Support& b) {
  Support out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support set_difference(const Support& a, const Support& b) {
  Support out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace

FinCofinSet::FinCofinSet(Kind kind, std::vector<Natural> support) : kind_(kind), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

FinCofinSet FinCofinSet::finite(std::vector<Natural> members) { return {Kind::Finite, std::move(members)}; }

FinCofinSet FinCofinSet::cofinite(std::vector<Natural> excluded) { return {Kind::Cofinite, std::move(excluded)}; }

FinCofinSet FinCofinSet::range(Natural n) {
  std::vector<Natural> members;
  for (Natural x = 0; x < n; ++x) members.push_back(x);
  return finite(std::move(members));
}

bool FinCofinSet::contains(Natural x) const {
  const bool listed = std::binary_search(support_.begin(), support_.end(), x);
  return kind_ == Kind::Finite ? listed : !listed;
}

FinCofinSet FinCofinSet::complement() const {
  return {kind_ == Kind::Finite ? Kind::Cofinite : Kind::Finite, support_};
}

FinCofinSet FinCofinSet::operator|(const FinCofinSet& o) const {
  if (kind_ == Kind::Finite && o.kind_ == Kind::Finite) return finite(set_union(support_, o.support_));
  if (kind_ == Kind::Cofinite && o.kind_ == Kind::Cofinite) return cofinite(set_intersection(support_, o.support_));
  const auto& fin = kind_ == Kind::Finite ? *this : o;
  const auto& cof = kind_ == Kind::Finite ? o : *this;
  return cofinite(set_difference(cof.support_, fin.support_));
}

FinCofinSet FinCofinSet::operator&(const FinCofinSet& o) const { return (complement() | o.complement()).complement(); }

std::string FinCofinSet::to_string() const {
  std::string out = kind_ == Kind::Finite ? "{" : "ℕ∖{";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(support_[i]);
  }
  return out + "}";
}

} // namespace maxitive::countable
