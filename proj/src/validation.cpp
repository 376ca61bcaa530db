#include "trinet/validation.hpp"

#include <chrono>
#include <stdexcept>

#include "trinet/formulas.hpp"

namespace trinet::validation {

namespace {

using Clock = std::chrono::steady_clock;
using checked::mul;
using checked::sub;

std::int64_t elapsed_ns(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count();
}

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::string& context) {
    ++check_.cases;
    if (ok) return;
    if (check_.failures++ == 0) check_.first_failure = context;
  }

  IdentityCheck done() { return std::move(check_); }

 private:
  IdentityCheck check_;
};

Int128 P(std::int64_t n) { return formulas::pentagon_closed(NetSize(n)).as_signed(); }
Int128 H(std::int64_t n) { return formulas::hexagon_closed(NetSize(n)).as_signed(); }
Int128 F(std::int64_t n) { return formulas::f_closed(NetSize(n)).as_signed(); }
Int128 G(std::int64_t n) { return formulas::g_closed(NetSize(n)).as_signed(); }

std::string at(const char* what, std::int64_t v) { return std::string(what) + "=" + std::to_string(v); }

const formulas::Order2Recurrence& recurrence_for(PolygonClass c) {
  static const auto pent = formulas::pentagon_recurrence_def();
  static const auto hex = formulas::hexagon_recurrence_def();
  return c == PolygonClass::Pentagon ? pent : hex;
}

ExactCount closed_for(PolygonClass c, NetSize n) {
  return c == PolygonClass::Pentagon ? formulas::pentagon_closed(n) : formulas::hexagon_closed(n);
}

ExactCount forcing_for(PolygonClass c, NetSize n) {
  return c == PolygonClass::Pentagon ? formulas::f_closed(n) : formulas::g_closed(n);
}

}  // namespace

void finalize(VerificationReport& r) {
  r.verdict = true;
  r.mismatches.clear();
  for (auto& rec : r.records) {
    rec.agree = rec.closed == rec.recurrence && (!rec.oracle || *rec.oracle == rec.closed) &&
                (!rec.forcing_oracle || *rec.forcing_oracle == rec.forcing_closed) &&
                (!rec.angle_law || *rec.angle_law);
    if (!rec.agree) {
      r.verdict = false;
      std::string msg = "n=" + std::to_string(rec.n) + " " + std::string(class_name(rec.cls)) +
                        ": closed=" + rec.closed.to_string() + " recurrence=" + rec.recurrence.to_string();
      if (rec.oracle) msg += " oracle=" + rec.oracle->to_string();
      msg += " forcing_closed=" + rec.forcing_closed.to_string();
      if (rec.forcing_oracle) msg += " forcing_oracle=" + rec.forcing_oracle->to_string();
      if (rec.angle_law && !*rec.angle_law) msg += " angle-law violated";
      r.mismatches.push_back(std::move(msg));
    }
  }
  for (const auto& c : r.checks) {
    if (c.passed()) continue;
    r.verdict = false;
    r.mismatches.push_back(c.name + ": " + std::to_string(c.failures) + " of " + std::to_string(c.cases) +
                           " failed, first at " + c.first_failure);
  }
}

namespace {

// Evaluates a closed form, turning an internal-consistency error into a
// failed identity case rather than aborting the run.
template <typename Fn>
bool holds(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::vector<IdentityCheck> identity_checks(NetSize n_max) {
  const std::int64_t m = n_max.value();
  std::vector<IdentityCheck> out;

  CheckBuilder div10("pentagon_divisibility_by_10");
  CheckBuilder div60("hexagon_divisibility_by_60");
  for (std::int64_t n = 1; n <= m; ++n) {
    div10.expect(holds([&] { return formulas::pentagon_numerator(NetSize(n)) % 10 == 0; }), at("n", n));
    div60.expect(holds([&] { return formulas::hexagon_numerator(NetSize(n)) % 60 == 0; }), at("n", n));
  }
  out.push_back(div10.done());
  out.push_back(div60.done());

  // k ranges: P(2k) - P(2k-1) needs 2k <= n_max, P(2k+1) - P(2k) needs 2k+1 <= n_max.
  CheckBuilder pdiff("pentagon_first_difference");
  CheckBuilder hdiff("hexagon_first_difference");
  CheckBuilder fstep("f_step");
  CheckBuilder gstep("g_step");
  for (std::int64_t k = 1; 2 * k <= m; ++k) {
    const Int128 K = k;
    const std::string ctx = at("k", k);
    pdiff.expect(holds([&] {
                   static constexpr Int128 c[] = {3, -4, 0, 1, 0};
                   return sub(P(2 * k), P(2 * k - 1)) == checked::horner(c, K);
                 }),
                 ctx + " (even step)");
    hdiff.expect(holds([&] {
                   static constexpr Int128 c[] = {12, -15, 5, 0, -2};
                   const Int128 rhs = mul(K, checked::horner(c, K));
                   return rhs % 30 == 0 && sub(H(2 * k), H(2 * k - 1)) == rhs / 30;
                 }),
                 ctx + " (even step)");
    fstep.expect(holds([&] { return sub(F(2 * k), F(2 * k - 1)) == 3 * (3 * K * K - 5 * K + 2); }),
                 ctx + " (even step)");
    gstep.expect(holds([&] {
                   const Int128 rhs = mul(K - 1, 4 * K * K - 5 * K + 2);
                   return rhs % 2 == 0 && sub(G(2 * k), G(2 * k - 1)) == rhs / 2;
                 }),
                 ctx + " (even step)");
    if (2 * k + 1 > m) continue;
    pdiff.expect(holds([&] {
                   static constexpr Int128 c[] = {6, 4, -3, -1, 0};
                   return mul(2, sub(P(2 * k + 1), P(2 * k))) == checked::horner(c, K);
                 }),
                 ctx + " (odd step)");
    hdiff.expect(holds([&] {
                   static constexpr Int128 c[] = {12, 15, 5, 0, -2};
                   const Int128 rhs = mul(K, checked::horner(c, K));
                   return rhs % 30 == 0 && sub(H(2 * k + 1), H(2 * k)) == rhs / 30;
                 }),
                 ctx + " (odd step)");
    fstep.expect(holds([&] { return sub(F(2 * k + 1), F(2 * k)) == 3 * (3 * K * K - 2 * K); }),
                 ctx + " (odd step)");
    gstep.expect(holds([&] {
                   const Int128 rhs = mul(K, 4 * K * K - 3 * K + 1);
                   return rhs % 2 == 0 && sub(G(2 * k + 1), G(2 * k)) == rhs / 2;
                 }),
                 ctx + " (odd step)");
  }
  out.push_back(pdiff.done());
  out.push_back(hdiff.done());
  out.push_back(fstep.done());
  out.push_back(gstep.done());

  CheckBuilder mono("strictly_increasing_from_3");
  for (std::int64_t n = 2; n <= m; ++n) {
    mono.expect(holds([&] {
                  if (n < 3) return P(n) >= P(n - 1) && H(n) >= H(n - 1);
                  return P(n) > P(n - 1) && H(n) > H(n - 1);
                }),
                at("n", n));
  }
  out.push_back(mono.done());
  return out;
}

VerificationReport cross_validate(NetSize n_max, const std::set<PolygonClass>& classes) {
  if (classes.empty()) throw std::invalid_argument("no classes to validate");
  for (PolygonClass c : classes)
    if (!formula_classes().contains(c))
      throw std::invalid_argument("no closed form for class " + std::string(class_name(c)));

  VerificationReport r;
  r.n_max = n_max.value();
  r.classes.assign(classes.begin(), classes.end());
  Timing timing;

  std::vector<std::vector<ExactCount>> recurrences;
  auto t0 = Clock::now();
  for (PolygonClass c : r.classes) recurrences.push_back(formulas::order2_sequence(recurrence_for(c), n_max));
  timing.recurrence_ns = elapsed_ns(t0);

  for (std::int64_t n = 1; n <= r.n_max; ++n) {
    const NetSize size(n);
    t0 = Clock::now();
    const CountTable all = count_by_class(size);
    const CountTable touching = count_touching_table(size, {Side::OA, Side::OB});
    const AngleLawSummary angles = angle_law_check(size);
    timing.oracle_ns += elapsed_ns(t0);
    const bool law = angles.violations == 0 && angles.pentagons_with_one_acute == angles.pentagons;

    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      const PolygonClass c = r.classes[i];
      Record rec;
      rec.n = n;
      rec.cls = c;
      rec.oracle = ExactCount(all[c]);
      rec.forcing_oracle = ExactCount(touching[c]);
      rec.angle_law = law;
      rec.recurrence = recurrences[i][static_cast<std::size_t>(n - 1)];
      t0 = Clock::now();
      rec.closed = closed_for(c, size);
      rec.forcing_closed = forcing_for(c, size);
      timing.closed_ns += elapsed_ns(t0);
      r.records.push_back(std::move(rec));
    }
  }

  t0 = Clock::now();
  r.checks = identity_checks(n_max);
  timing.identities_ns = elapsed_ns(t0);
  r.timing = timing;
  finalize(r);
  return r;
}

VerificationReport formula_only_validate(NetSize n_max) {
  VerificationReport r;
  r.n_max = n_max.value();
  r.formula_only = true;
  r.classes.assign(formula_classes().begin(), formula_classes().end());
  Timing timing;

  std::vector<std::vector<ExactCount>> recurrences;
  auto t0 = Clock::now();
  for (PolygonClass c : r.classes) recurrences.push_back(formulas::order2_sequence(recurrence_for(c), n_max));
  timing.recurrence_ns = elapsed_ns(t0);

  r.records.reserve(static_cast<std::size_t>(r.n_max) * r.classes.size());
  t0 = Clock::now();
  for (std::int64_t n = 1; n <= r.n_max; ++n) {
    const NetSize size(n);
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      const PolygonClass c = r.classes[i];
      Record rec;
      rec.n = n;
      rec.cls = c;
      rec.recurrence = recurrences[i][static_cast<std::size_t>(n - 1)];
      rec.closed = closed_for(c, size);
      rec.forcing_closed = forcing_for(c, size);
      r.records.push_back(std::move(rec));
    }
  }
  timing.closed_ns = elapsed_ns(t0);

  t0 = Clock::now();
  r.checks = identity_checks(n_max);
  timing.identities_ns = elapsed_ns(t0);
  r.timing = timing;
  finalize(r);
  return r;
}

}  // namespace trinet::validation
