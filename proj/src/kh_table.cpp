#include "khopos/kh_table.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "khopos/diagram.hpp"

namespace khopos {

void KhTable::set(int i, int j, AbelianGroup g) {
  if (!window_.contains(i)) throw PreconditionError("grading i=" + std::to_string(i) + " lies outside the window");
  if (g.is_zero()) {
    groups_.erase({i, j});
  } else {
    groups_[{i, j}] = std::move(g);
  }
}

std::optional<AbelianGroup> KhTable::at(int i, int j) const {
  if (!window_.contains(i)) return std::nullopt;
  return known(i, j);
}

AbelianGroup KhTable::known(int i, int j) const {
  auto it = groups_.find({i, j});
  return it == groups_.end() ? AbelianGroup{} : it->second;
}

KhTable KhTable::restrict(int lo, int hi) const {
  if (!window_.contains(lo) || !window_.contains(hi)) throw PreconditionError("restriction leaves the window");
  KhTable t(ring_, Window::range(lo, hi));
  for (const auto& [k, g] : groups_)
    if (k.first >= lo && k.first <= hi) t.groups_[k] = g;
  return t;
}

KhTable KhTable::shifted(int di, int dj) const {
  Window w = window_;
  if (w.lo) *w.lo += di;
  if (w.hi) *w.hi += di;
  KhTable t(ring_, w);
  for (const auto& [k, g] : groups_) t.groups_[{k.first + di, k.second + dj}] = g;
  return t;
}

std::int64_t KhTable::total_rank() const {
  std::int64_t s = 0;
  for (const auto& kv : groups_) s += kv.second.freeRank;
  return s;
}

std::map<int, std::int64_t> KhTable::graded_euler() const {
  std::map<int, std::int64_t> out;
  for (const auto& [k, g] : groups_) out[k.second] += (k.first % 2 == 0 ? 1 : -1) * g.freeRank;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {

nlohmann::json factor_json(const mpz_class& f) {
  if (f.fits_slong_p()) return f.get_si();
  return f.get_str();
}

mpz_class factor_from(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw ParseError("torsion factor must be an integer");
}

}  // namespace

nlohmann::json KhTable::to_json() const {
  nlohmann::json j;
  j["ring"] = ring_.name();
  if (window_.is_full()) {
    j["window"] = "full";
  } else {
    j["window"] = nlohmann::json::array({window_.lo ? nlohmann::json(*window_.lo) : nlohmann::json(nullptr),
                                         window_.hi ? nlohmann::json(*window_.hi) : nlohmann::json(nullptr)});
  }
  auto groups = nlohmann::json::array();
  for (const auto& [k, g] : groups_) {
    auto tors = nlohmann::json::array();
    for (const auto& f : g.torsion) tors.push_back(factor_json(f));
    groups.push_back({{"i", k.first}, {"j", k.second}, {"rank", g.freeRank}, {"torsion", tors}});
  }
  j["groups"] = groups;
  return j;
}

KhTable KhTable::from_json(const nlohmann::json& j) {
  try {
    const Ring ring = Ring::parse(j.at("ring").get<std::string>());
    Window w;
    const auto& jw = j.at("window");
    if (jw.is_string()) {
      if (jw.get<std::string>() != "full") throw ParseError("window must be \"full\" or [lo, hi]");
    } else if (jw.is_array() && jw.size() == 2) {
      if (!jw[0].is_null()) w.lo = jw[0].get<int>();
      if (!jw[1].is_null()) w.hi = jw[1].get<int>();
      if (w.lo && w.hi && *w.lo > *w.hi) throw ParseError("window bounds out of order");
    } else {
      throw ParseError("window must be \"full\" or [lo, hi]");
    }
    KhTable t(ring, w);
    for (const auto& g : j.at("groups")) {
      AbelianGroup a;
      a.freeRank = g.at("rank").get<std::int64_t>();
      if (a.freeRank < 0) throw ParseError("negative rank");
      if (g.contains("torsion"))
        for (const auto& f : g.at("torsion")) a.torsion.push_back(factor_from(f));
      for (std::size_t k = 0; k < a.torsion.size(); ++k) {
        if (a.torsion[k] <= 1) throw ParseError("torsion factors must exceed 1");
        if (k > 0 && a.torsion[k] % a.torsion[k - 1] != 0) throw ParseError("torsion factors must form a divisibility chain");
      }
      t.set(g.at("i").get<int>(), g.at("j").get<int>(), std::move(a));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed table JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("malformed table JSON: ") + e.what());
  }
}

std::string KhTable::to_grid() const {
  std::ostringstream os;
  if (groups_.empty()) {
    os << "(all groups zero)\n";
    return os.str();
  }
  std::set<int> is, js;
  for (const auto& kv : groups_) {
    is.insert(kv.first.first);
    js.insert(kv.first.second);
  }
  int iLo = *is.begin(), iHi = *is.rbegin();
  if (window_.lo) iLo = std::min(iLo, *window_.lo);
  if (window_.hi) iHi = std::max(iHi, *window_.hi);
  std::size_t width = 1;
  for (const auto& kv : groups_) width = std::max(width, kv.second.to_string().size());
  width = std::max<std::size_t>(width, 4) + 1;
  os << std::setw(5) << "j\\i";
  for (int i = iLo; i <= iHi; ++i) os << std::setw(static_cast<int>(width)) << i;
  os << '\n';
  for (auto jt = js.rbegin(); jt != js.rend(); ++jt) {
    os << std::setw(5) << *jt;
    for (int i = iLo; i <= iHi; ++i) {
      std::string cell;
      if (!window_.contains(i)) cell = "?";
      else if (auto it = groups_.find({i, *jt}); it != groups_.end()) cell = it->second.to_string();
      else cell = ".";
      os << std::setw(static_cast<int>(width)) << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string KhTable::to_csv() const {
  std::ostringstream os;
  os << "i,j,rank,torsion\n";
  for (const auto& [k, g] : groups_) {
    os << k.first << ',' << k.second << ',' << g.freeRank << ',';
    for (std::size_t t = 0; t < g.torsion.size(); ++t) os << (t ? " " : "") << g.torsion[t].get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace khopos
