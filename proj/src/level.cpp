#include "tenpage/level.hpp"

#include <queue>

namespace tenpage {

LevelDecomposition compute_levels(const PlaneGraph& skeleton,
                                  const FaceSet& faces) {
  LevelDecomposition out;
  out.level.assign(skeleton.n, -1);
  if (skeleton.outer < 0) return out;

  std::queue<VertexId> q;
  auto settle = [&](VertexId v, int l) {
    if (out.level[v] >= 0) return;
    out.level[v] = l;
    if (l > out.max_level) out.max_level = l;
    q.push(v);
  };
  for (Dart d : faces.faces[faces.outer]) settle(skeleton.tail(d), 0);

  std::vector<char> face_done(faces.faces.size(), 0);
  face_done[faces.outer] = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    Dart d0 = skeleton.vertex_dart[v];
    if (d0 < 0) continue;
    Dart d = d0;
    do {
      int f = faces.face_of[d];
      if (!face_done[f]) {
        face_done[f] = 1;
        for (Dart b : faces.faces[f]) settle(skeleton.tail(b), out.level[v] + 1);
      }
      d = skeleton.cw_next[d];
    } while (d != d0);
  }
  return out;
}

}  // namespace tenpage
