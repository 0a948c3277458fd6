#include "mc4p/mcg.hpp"

#include <deque>
#include <unordered_set>
#include <utility>

namespace mc4p {

namespace {

CycNum det2(const CMat& m) {
  return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

}  // namespace

MonodromyTuple apply_move(const MonodromyTuple& t, const BraidMove& mv) {
  if (t.rank() != 2) throw DimensionError("braid moves expect rank-2 tuples");
  auto moved = [&mv](const CMat& a, const CMat& b) -> std::pair<CMat, CMat> {
    if (!mv.inverse) return {b, mat_inv(b) * a * b};
    return {a * b * mat_inv(a), a};
  };
  switch (mv.index) {
    case 1: {
      auto [na, nb] = moved(t.M0(), t.M1());
      return make_tuple(na, nb, t.Mlambda());
    }
    case 2: {
      auto [na, nb] = moved(t.M1(), t.Mlambda());
      return make_tuple(t.M0(), na, nb);
    }
    case 3: {
      // Only the third stored slot changes; the derived fourth slot then
      // equals the Hurwitz image because the total product is fixed.
      if (!mv.inverse) return make_tuple(t.M0(), t.M1(), t.Minf());
      return make_tuple(t.M0(), t.M1(), t.Mlambda() * t.Minf() * mat_inv(t.Mlambda()));
    }
    default:
      throw ParameterError("braid index must be 1, 2, or 3");
  }
}

TraceCoordinates squared_move_on_coordinates(const TraceCoordinates& tc, int index,
                                             bool inverse) {
  TraceCoordinates r = tc;
  const CycNum bx = tc.a0 * tc.a1 + tc.alambda * tc.ainf;
  const CycNum by = tc.a1 * tc.alambda + tc.a0 * tc.ainf;
  const CycNum bz = tc.a0 * tc.alambda + tc.a1 * tc.ainf;
  switch (index) {
    case 1:
    case 3:
      if (!inverse) {
        r.z = bz - tc.z - tc.x * tc.y;
        r.y = by - tc.y - tc.x * r.z;
      } else {
        r.y = by - tc.y - tc.x * tc.z;
        r.z = bz - tc.z - tc.x * r.y;
      }
      return r;
    case 2:
      if (!inverse) {
        r.x = bx - tc.x - tc.y * tc.z;
        r.z = bz - tc.z - tc.y * r.x;
      } else {
        r.z = bz - tc.z - tc.y * tc.x;
        r.x = bx - tc.x - tc.y * r.z;
      }
      return r;
    default:
      throw ParameterError("braid index must be 1, 2, or 3");
  }
}

OrbitReport orbit(const MonodromyTuple& t, long bound) {
  if (bound < 1) throw ParameterError("orbit bound must be positive");
  if (t.rank() != 2) throw DimensionError("orbit expects rank-2 tuples");
  if (!is_irreducible(t)) throw ParameterError("orbit requires an irreducible tuple");
  const CycNum one(1);
  for (const CMat* m : {&t.M0(), &t.M1(), &t.Mlambda()})
    if (det2(*m) != one)
      throw ParameterError("coordinate dynamics requires determinant-one tuples");

  const TraceCoordinates seed = trace_coordinates(t);

  struct Node {
    CycNum x, y, z;
    std::string word;
  };
  auto key_of = [](const Node& n) {
    return n.x.key() + ";" + n.y.key() + ";" + n.z.key();
  };

  static constexpr struct {
    int index;
    bool inverse;
    char letter;
  } kGenerators[] = {{1, false, 'a'}, {1, true, 'A'}, {2, false, 'b'},
                     {2, true, 'B'},  {3, false, 'c'}, {3, true, 'C'}};

  std::deque<Node> queue;
  std::unordered_set<std::string> seen;
  std::vector<OrbitPoint> points;
  Node start{seed.x.reduced(), seed.y.reduced(), seed.z.reduced(), ""};
  seen.insert(key_of(start));
  queue.push_back(std::move(start));
  bool exceeded = false;

  while (!queue.empty() && !exceeded) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    points.push_back({cur.x, cur.y, cur.z, cur.word});
    for (const auto& g : kGenerators) {
      TraceCoordinates in = seed;
      in.x = cur.x;
      in.y = cur.y;
      in.z = cur.z;
      const TraceCoordinates out = squared_move_on_coordinates(in, g.index, g.inverse);
      Node next{out.x.reduced(), out.y.reduced(), out.z.reduced(), cur.word + g.letter};
      if (!seen.insert(key_of(next)).second) continue;
      if (static_cast<long>(seen.size()) > bound) {
        exceeded = true;
        break;
      }
      queue.push_back(std::move(next));
    }
  }
  return {seed, exceeded, static_cast<long>(seen.size()), std::move(points)};
}

std::string orbit_csv(const OrbitReport& r) {
  std::string out = "\"x\",\"y\",\"z\",\"word\"\n";
  for (const OrbitPoint& p : r.points) {
    out += "\"" + p.x.key() + "\",\"" + p.y.key() + "\",\"" + p.z.key() + "\",\"" +
           p.word + "\"\n";
  }
  return out;
}

}  // namespace mc4p
