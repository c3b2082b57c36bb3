#include "ballot/walks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ballot {

namespace {

struct Step {
  int dx, dy;
};

const Step kGesselSteps[4] = {{0, 1}, {0, -1}, {1, 1}, {-1, -1}};
const Step kGbSteps[4] = {{0, 1}, {0, -1}, {-1, 0}, {1, 0}};

bool in_region(WalkKind kind, int x, int y) {
  if (x < 0 || y < 0) return false;
  return kind == WalkKind::Gessel || y <= x;
}

void check_region(WalkKind kind, Coord c, const char* what) {
  if (!in_region(kind, c.x, c.y))
    throw std::invalid_argument(std::string(what) + " outside the allowed region");
}

// dense DP keyed by (x, y); grid large enough for n steps from start
BigInt step_dp(WalkKind kind, int n, Coord start, Coord end) {
  const int W = start.x + n + 1, H = start.y + n + 1;
  auto idx = [&](int x, int y) { return x * (H + 1) + y; };
  std::vector<BigInt> cur((W + 1) * (H + 1)), nxt;
  cur[idx(start.x, start.y)] = 1;
  const Step* steps = kind == WalkKind::Gessel ? kGesselSteps : kGbSteps;
  for (int s = 0; s < n; ++s) {
    nxt.assign(cur.size(), BigInt(0));
    for (int x = 0; x <= W; ++x)
      for (int y = 0; y <= H; ++y) {
        const BigInt& c = cur[idx(x, y)];
        if (c == 0) continue;
        for (int d = 0; d < 4; ++d) {
          const int nx = x + steps[d].dx, ny = y + steps[d].dy;
          if (nx < 0 || ny < 0 || nx > W || ny > H) continue;
          if (!in_region(kind, nx, ny)) continue;
          nxt[idx(nx, ny)] += c;
        }
      }
    cur.swap(nxt);
  }
  if (end.x > W || end.y > H) return 0;
  return cur[idx(end.x, end.y)];
}

void brute_rec(WalkKind kind, int x, int y, int left,
               std::map<Coord, BigInt>& tally) {
  if (left == 0) {
    ++tally[{x, y}];
    return;
  }
  const Step* steps = kind == WalkKind::Gessel ? kGesselSteps : kGbSteps;
  for (int d = 0; d < 4; ++d) {
    const int nx = x + steps[d].dx, ny = y + steps[d].dy;
    if (in_region(kind, nx, ny)) brute_rec(kind, nx, ny, left - 1, tally);
  }
}

std::map<Coord, BigInt> brute_endpoints(WalkKind kind, int n, Coord start) {
  if (n > kBruteWalkLimit)
    throw std::invalid_argument("brute walk enumeration limited to n <= 14");
  std::map<Coord, BigInt> tally;
  brute_rec(kind, start.x, start.y, n, tally);
  return tally;
}

// axis endpoints for the first-passage recurrence
Coord axis_point(WalkKind kind, int h) {
  return kind == WalkKind::Gessel ? Coord{0, h} : Coord{h, 0};
}

int axis_value(WalkKind kind, Coord c, bool* on_axis) {
  if (kind == WalkKind::Gessel) {
    *on_axis = c.x == 0;
    return c.y;
  }
  *on_axis = c.y == 0;
  return c.x;
}

}  // namespace

const BigInt CountTable::kZero{0};

CountTable::CountTable(WalkKind kind, int max_n, int max_hb)
    : kind_(kind), max_n_(max_n), max_hb_(max_hb) {}

BigInt& CountTable::cell(int n, int h, int b) {
  const int span = max_hb_ + max_n_ + 2;
  return data_[(static_cast<size_t>(n) * span + h) * span + b];
}

const BigInt& CountTable::at(int n, int h, int b) const {
  const int span = max_hb_ + max_n_ + 2;
  if (n < 0 || n > max_n_ || h < 0 || b < 0 || h >= span || b >= span)
    return kZero;
  return data_[(static_cast<size_t>(n) * span + h) * span + b];
}

CountTable CountTable::build(WalkKind kind, int max_n, int max_hb,
                             WalkMethod method) {
  CountTable t(kind, max_n, max_hb);
  // head-room: the recurrence reaches heights up to max_hb + max_n
  const int span = max_hb + max_n + 2;
  t.data_.assign(static_cast<size_t>(max_n + 1) * span * span, BigInt(0));
  switch (method) {
    case WalkMethod::Recurrence: {
      for (int h = 0; h < span; ++h) t.cell(0, h, h) = 1;
      for (int n = 1; n <= max_n; ++n)
        for (int h = 0; h < span; ++h)
          for (int b = 0; b < span; ++b) {
            BigInt v = h + 1 < span ? t.cell(n - 1, h + 1, b) : BigInt(0);
            if (h >= 1) v += t.cell(n - 1, h - 1, b);
            if (kind == WalkKind::Gessel) {
              for (int i = 0; i <= n - 2; ++i)
                for (int a = 0; a + 1 < span; ++a) {
                  const BigInt& f = h + 1 < span ? t.cell(i, h + 1, a + 1) : kZero;
                  if (f != 0) v += f * t.cell(n - 2 - i, a, b);
                }
            } else if (h >= 1) {
              for (int i = 0; i <= n - 2; ++i)
                for (int a = 0; a + 1 < span; ++a) {
                  const BigInt& f = t.cell(i, h - 1, a);
                  if (f != 0) v += f * t.cell(n - 2 - i, a + 1, b);
                }
            }
            t.cell(n, h, b) = std::move(v);
          }
      break;
    }
    case WalkMethod::StepDp: {
      // one n-step sweep per start, tallying axis hits at every depth
      for (int h = 0; h < span; ++h) {
        const Coord start = axis_point(kind, h);
        const int W = start.x + max_n + 1, H = start.y + max_n + 1;
        auto idx = [&](int x, int y) { return x * (H + 1) + y; };
        std::vector<BigInt> cur((W + 1) * (H + 1)), nxt;
        cur[idx(start.x, start.y)] = 1;
        for (int n = 0; n <= max_n; ++n) {
          for (int b = 0; b < span; ++b) {
            const Coord e = axis_point(kind, b);
            if (e.x <= W && e.y <= H) t.cell(n, h, b) = cur[idx(e.x, e.y)];
          }
          if (n == max_n) break;
          nxt.assign(cur.size(), BigInt(0));
          const Step* steps = kind == WalkKind::Gessel ? kGesselSteps : kGbSteps;
          for (int x = 0; x <= W; ++x)
            for (int y = 0; y <= H; ++y) {
              const BigInt& c = cur[idx(x, y)];
              if (c == 0) continue;
              for (int d = 0; d < 4; ++d) {
                const int nx = x + steps[d].dx, ny = y + steps[d].dy;
                if (nx < 0 || ny < 0 || nx > W || ny > H) continue;
                if (!in_region(kind, nx, ny)) continue;
                nxt[idx(nx, ny)] += c;
              }
            }
          cur.swap(nxt);
        }
      }
      break;
    }
    case WalkMethod::Brute: {
      if (max_n > kBruteWalkLimit)
        throw std::invalid_argument("brute walk enumeration limited to n <= 14");
      for (int h = 0; h <= max_hb; ++h) {
        const Coord start = axis_point(kind, h);
        // every DFS node at depth n is an n-step walk
        struct R {
          WalkKind kind;
          CountTable* t;
          int h, max_n;
          void run(int x, int y, int depth) {
            bool on_axis = false;
            const int b = axis_value(kind, {x, y}, &on_axis);
            if (on_axis) {
              const int span = t->max_hb_ + t->max_n_ + 2;
              if (b < span) ++t->cell(depth, h, b);
            }
            if (depth == max_n) return;
            const Step* steps = kind == WalkKind::Gessel ? kGesselSteps : kGbSteps;
            for (int d = 0; d < 4; ++d) {
              const int nx = x + steps[d].dx, ny = y + steps[d].dy;
              if (in_region(kind, nx, ny)) run(nx, ny, depth + 1);
            }
          }
        };
        R r{kind, &t, h, max_n};
        r.run(start.x, start.y, 0);
      }
      break;
    }
  }
  return t;
}

BigInt count_walks(WalkKind kind, int n, Coord start, Coord end,
                   WalkMethod method) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  check_region(kind, start, "start");
  check_region(kind, end, "end");
  switch (method) {
    case WalkMethod::StepDp:
      return step_dp(kind, n, start, end);
    case WalkMethod::Brute: {
      auto tally = brute_endpoints(kind, n, start);
      auto it = tally.find(end);
      return it == tally.end() ? BigInt(0) : it->second;
    }
    case WalkMethod::Recurrence: {
      bool s_axis = false, e_axis = false;
      const int h = axis_value(kind, start, &s_axis);
      const int b = axis_value(kind, end, &e_axis);
      if (!s_axis || !e_axis)
        throw std::invalid_argument(
            "the first-passage recurrence needs axis endpoints");
      return CountTable::build(kind, n, std::max(h, b), WalkMethod::Recurrence)
          .at(n, h, b);
    }
  }
  throw std::logic_error("unreachable");
}

BigInt count_walks_axis_total(WalkKind kind, int n, Coord start,
                              WalkMethod method) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  check_region(kind, start, "start");
  BigInt total = 0;
  if (method == WalkMethod::Brute) {
    for (auto& [end, c] : brute_endpoints(kind, n, start)) {
      bool on_axis = false;
      axis_value(kind, end, &on_axis);
      if (on_axis) total += c;
    }
    return total;
  }
  for (int b = 0; b <= n + std::max(start.x, start.y); ++b) {
    const Coord end = axis_point(kind, b);
    if (method == WalkMethod::StepDp)
      total += step_dp(kind, n, start, end);
    else
      total += count_walks(kind, n, start, end, method);
  }
  return total;
}

BigRat gessel_closed_form_rational(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  auto poch = [n](const BigRat& a) {
    BigRat r = 1;
    for (int i = 0; i < n; ++i) r *= a + i;
    return r;
  };
  BigRat p16 = 1;
  for (int i = 0; i < n; ++i) p16 *= 16;
  return p16 * poch(BigRat(5, 6)) * poch(BigRat(1, 2)) /
         (poch(BigRat(5, 3)) * poch(BigRat(2)));
}

BigInt gessel_closed_form(int n) {
  const BigRat v = gessel_closed_form_rational(n);
  if (denominator(v) != 1)
    throw std::logic_error("closed form evaluated to a non-integer");
  return numerator(v);
}

}  // namespace ballot
