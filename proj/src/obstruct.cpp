#include "khopos/obstruct.hpp"

#include <future>
#include <sstream>

#include "khopos/seifert.hpp"

namespace khopos {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "obstructed";
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

nlohmann::json group_json(const AbelianGroup& g) {
  auto tors = nlohmann::json::array();
  for (const auto& f : g.torsion) tors.push_back(f.get_str());
  return {{"rank", g.freeRank}, {"torsion", tors}, {"text", g.to_string()}};
}

bool is_single_free(const AbelianGroup& g) { return g.freeRank == 1 && g.torsion.empty(); }

}  // namespace

nlohmann::json ObstructionReport::to_json() const {
  nlohmann::json j;
  j["verdict"] = to_string(verdict);
  j["fieldStrength"] = fieldStrength;
  j["feasibleChi"] = feasibleChi ? nlohmann::json(*feasibleChi) : nlohmann::json(nullptr);
  j["feasibleP1"] = feasibleP1 ? nlohmann::json(*feasibleP1) : nlohmann::json(nullptr);
  auto v = nlohmann::json::array();
  for (const auto& x : violations) v.push_back({{"pattern", x.pattern}, {"i", x.i}, {"j", x.j}, {"found", group_json(x.found)}});
  j["violations"] = v;
  j["notes"] = notes;
  j["summary"] = summary;
  return j;
}

ObstructionReport positive_pattern_check(const KhTable& t) {
  ObstructionReport rep;
  rep.fieldStrength = t.ring().is_field();
  const Window& w = t.window();
  const bool belowCovered = !w.lo;
  const bool has0 = w.contains(0), has1 = w.contains(1);
  auto violate = [&](const std::string& pattern, int i, int j) {
    rep.violations.push_back({pattern, i, j, t.known(i, j)});
  };

  for (const auto& [k, g] : t.groups())
    if (k.first < 0) violate("vanishing-negative-i", k.first, k.second);

  std::optional<int> j0;
  if (has0) {
    for (const auto& [k, g] : t.groups())
      if (k.first == 0 && (!j0 || k.second < *j0)) j0 = k.second;
    if (!j0) {
      rep.violations.push_back({"kh0-support", 0, 0, {}});
    } else {
      if (!is_single_free(t.known(0, *j0))) violate("kh0-support", 0, *j0);
      if (!is_single_free(t.known(0, *j0 + 2))) violate("kh0-support", 0, *j0 + 2);
      for (const auto& [k, g] : t.groups()) {
        const auto [i, j] = k;
        if (i == 0 && j != *j0 && j != *j0 + 2) violate("kh0-support", i, j);
        if (j < *j0 && i >= 0) violate("vanishing-below-chi", i, j);
        if (j == *j0 && i > 0) violate("bottom-row", i, j);
        if (j == *j0 + 2 && i > 1) violate("second-row", i, j);
        if (i == 1 && j != *j0 + 2) violate("kh1-support", i, j);
      }
      if (has1 && !t.known(1, *j0 + 2).torsion.empty()) violate("kh1-free", 1, *j0 + 2);
    }
  }

  std::ostringstream sum;
  if (!rep.violations.empty()) {
    rep.verdict = Verdict::Obstructed;
    const auto& v = rep.violations.front();
    sum << "not positive: Kh^{" << v.i << "," << v.j << "} = " << v.found.to_string() << " breaks the "
        << v.pattern << " pattern";
    if (rep.violations.size() > 1) sum << " (" << rep.violations.size() << " violations)";
  } else if (belowCovered && has0 && has1) {
    rep.verdict = Verdict::Consistent;
    rep.feasibleChi = -*j0;
    rep.feasibleP1 = static_cast<int>(t.known(1, *j0 + 2).freeRank);
    sum << "consistent with a positive link of Euler characteristic " << *rep.feasibleChi << " and p1 = "
        << *rep.feasibleP1;
    if (*rep.feasibleP1 == 0) sum << "; a positive representative would be fibered";
    else sum << "; a positive representative would not be fibered";
    if (rep.fieldStrength) sum << " (field coefficients: freeness not tested)";
  } else {
    rep.verdict = Verdict::Inconclusive;
    if (!belowCovered) rep.notes.push_back("window does not cover all negative homological gradings");
    if (!has0) rep.notes.push_back("window does not contain i = 0");
    if (!has1) rep.notes.push_back("window does not contain i = 1");
    sum << "inconclusive: no violation inside the window, but the window is too small to certify the pattern";
  }
  rep.summary = sum.str();
  return rep;
}

nlohmann::json DualReport::to_json() const {
  return {{"verdict", to_string(verdict)}, {"positive", positive.to_json()}, {"negative", negative.to_json()}};
}

DualReport positivity_or_negativity_check(const KhTable& t, const KhTable& mirrorTable) {
  DualReport d;
  d.positive = positive_pattern_check(t);
  d.negative = positive_pattern_check(mirrorTable);
  if (d.positive.verdict == Verdict::Consistent || d.negative.verdict == Verdict::Consistent) {
    d.verdict = Verdict::Consistent;
  } else if (d.positive.verdict == Verdict::Obstructed && d.negative.verdict == Verdict::Obstructed) {
    d.verdict = Verdict::Obstructed;
  } else {
    d.verdict = Verdict::Inconclusive;
  }
  return d;
}

nlohmann::json CrosscheckReport::to_json() const {
  return {{"verdict", to_string(verdict)}, {"fibered", fibered}, {"p1", p1}, {"chi", chi},
          {"kh1", kh1.to_json()}, {"failures", failures}};
}

CrosscheckReport theorem12_crosscheck(const LinkDiagram& d, const Ring& ring, const KhOptions& opt) {
  if (!d.is_positive()) throw PreconditionError("diagram is not positive");
  if (!diagram_connected(d)) throw PreconditionError("diagram is split");
  CrosscheckReport r;
  r.fibered = fibered_test(d);
  r.p1 = p1(d);
  r.chi = euler_char(d);
  r.kh1 = khovanov_window(d, 1, 1, ring, opt);
  const int jStar = 2 - r.chi;
  bool kh1Zero = true;
  for (const auto& [k, g] : r.kh1.groups()) {
    if (k.first != 1) continue;
    kh1Zero = false;
    if (k.second != jStar) r.failures.push_back("Kh^{1," + std::to_string(k.second) + "} = " + g.to_string() + " off j = 2 - chi");
  }
  const AbelianGroup at = r.kh1.known(1, jStar);
  if (at.freeRank != r.p1 || !at.torsion.empty())
    r.failures.push_back("Kh^{1," + std::to_string(jStar) + "} = " + at.to_string() + ", expected rank p1 = " + std::to_string(r.p1));
  if (r.fibered != kh1Zero)
    r.failures.push_back(std::string("fibered test is ") + (r.fibered ? "true" : "false") + " but Kh^1 is " + (kh1Zero ? "zero" : "nonzero"));
  r.verdict = r.failures.empty() ? Verdict::Consistent : Verdict::Inconclusive;
  return r;
}

nlohmann::json LesReport::to_json() const {
  auto eq = nlohmann::json::array();
  for (const auto& [i, j] : equalities) eq.push_back({i, j});
  return {{"crossing", crossing}, {"writhe", writhe}, {"writhe0", writhe0}, {"shiftI", shiftI}, {"shiftJ", shiftJ},
          {"window", {window.lo, window.hi}}, {"checks", checks}, {"ok", ok()}, {"failures", failures},
          {"equalities", eq}, {"kh", kh.to_json()}, {"kh1", kh1.to_json()}, {"kh0", kh0.to_json()}};
}

LesReport skein_les_verify(const LinkDiagram& d, int v, const Ring& field, LesWindow window, const KhOptions& opt) {
  if (v < 0 || v >= d.crossing_count()) throw PreconditionError("crossing " + std::to_string(v) + " does not exist");
  if (d.crossings()[static_cast<std::size_t>(v)].sign > 0) throw PreconditionError("crossing " + std::to_string(v) + " is not negative");
  if (!field.is_field()) throw PreconditionError("skein verification needs field coefficients");
  if (window.lo > window.hi) throw PreconditionError("window lower bound exceeds upper bound");

  LesReport r;
  r.crossing = v;
  r.window = window;
  const LinkDiagram d1 = smooth(d, v, 1, Reorient::PreserveAll);
  const LinkDiagram d0 = smooth(d, v, 0, Reorient::PreserveUninvolved);
  r.writhe = d.writhe();
  r.writhe0 = d0.writhe();
  const int diff = r.writhe0 - r.writhe;
  if ((diff + 1) % 2 != 0) throw std::logic_error("writhe difference of the 0-smoothing is even");
  const int s = (diff + 1) / 2, t = (3 * diff + 1) / 2;
  r.shiftI = s;
  r.shiftJ = t;

  auto job = [&](const LinkDiagram& x, int lo, int hi) { return khovanov_window(x, lo, hi, field, opt); };
  if (opt.workers > 1) {
    KhOptions inner = opt;
    inner.workers = std::max(1, opt.workers / 3);
    auto f1 = std::async(std::launch::async, [&] { return khovanov_window(d1, window.lo, window.hi + 1, field, inner); });
    auto f0 = std::async(std::launch::async, [&] { return khovanov_window(d0, window.lo + s - 1, window.hi + s, field, inner); });
    r.kh = khovanov_window(d, window.lo, window.hi, field, inner);
    r.kh1 = f1.get();
    r.kh0 = f0.get();
  } else {
    r.kh = job(d, window.lo, window.hi);
    r.kh1 = job(d1, window.lo, window.hi + 1);
    r.kh0 = job(d0, window.lo + s - 1, window.hi + s);
  }

  std::set<int> js;
  for (const auto& kv : r.kh.groups()) js.insert(kv.first.second);
  for (const auto& kv : r.kh1.groups()) js.insert(kv.first.second - 1);
  for (const auto& kv : r.kh0.groups()) js.insert(kv.first.second - t);

  auto dimA = [&](int i, int j) { return r.kh1.known(i, j + 1).freeRank; };
  auto dimB = [&](int i, int j) { return r.kh.known(i, j).freeRank; };
  auto dimC = [&](int i, int j) { return r.kh0.known(i + s, j + t).freeRank; };

  for (int j : js) {
    // C_{lo-1}, A_lo, B_lo, C_lo, ..., B_hi, C_hi, A_{hi+1}
    std::vector<std::int64_t> seq;
    std::vector<std::string> names;
    auto push = [&](std::int64_t x, const std::string& n) {
      seq.push_back(x);
      names.push_back(n);
    };
    push(dimC(window.lo - 1, j), "D0 at i=" + std::to_string(window.lo - 1));
    for (int i = window.lo; i <= window.hi; ++i) {
      push(dimA(i, j), "D1 at i=" + std::to_string(i));
      push(dimB(i, j), "D at i=" + std::to_string(i));
      push(dimC(i, j), "D0 at i=" + std::to_string(i));
      ++r.checks;
      if (std::llabs(dimB(i, j) - dimA(i, j)) > dimC(i - 1, j) + dimC(i, j)) {
        r.failures.push_back("|dim Kh^{" + std::to_string(i) + "," + std::to_string(j) + "}(D) - dim Kh^{" +
                             std::to_string(i) + "," + std::to_string(j + 1) + "}(D1)| exceeds the D0 terms");
      }
      if (dimB(i, j) == dimA(i, j)) r.equalities.insert({i, j});
    }
    push(dimA(window.hi + 1, j), "D1 at i=" + std::to_string(window.hi + 1));

    for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
      ++r.checks;
      if (seq[k] > seq[k - 1] + seq[k + 1])
        r.failures.push_back("j=" + std::to_string(j) + ": " + names[k] + " exceeds its neighbours");
    }
    std::optional<std::size_t> lastZero;
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (seq[k] == 0) {
        if (lastZero && k > *lastZero + 1) {
          ++r.checks;
          if (alt != 0)
            r.failures.push_back("j=" + std::to_string(j) + ": alternating sum between " + names[*lastZero] + " and " +
                                 names[k] + " is " + std::to_string(alt));
        }
        lastZero = k;
        alt = 0;
      } else {
        alt += (k % 2 == 0 ? 1 : -1) * seq[k];
      }
    }
  }
  return r;
}

std::set<std::pair<int, int>> exceptional_gradings(int w, int w0) {
  if ((w - w0 - 1) % 2 != 0) throw PreconditionError("(w - w0 - 1) / 2 is not an integer");
  const int u = (w - w0 - 1) / 2;
  const int c = 3 * u + 2;
  return {{u, c - 1}, {u, c + 1}, {u + 1, c - 1}, {u + 1, c + 1}};
}

}  // namespace khopos
