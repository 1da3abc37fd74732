// Planar subdivision of a convex polygon by interior-disjoint segments,
// with exact rational coordinates. Faces are extracted by angular walks on
// a half-edge structure; a face may have holes (a closed curve floating in
// a region), in which case the hole cycles are attached to the containing
// face and participate in its boundary chain.
//
// Input segments must already be split at mutual intersection points; the
// construction does not create new crossings.
#pragma once

#include "exsys/geom.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace exsys {

struct SubSegment {
    RVec2 a, b;
    int payload = -1;  // caller tag carried onto the edge
};

struct Subdivision {
    struct Vertex {
        RVec2 p;
    };
    struct Edge {
        int v0 = -1, v1 = -1;     // tail, head (orientation as stored)
        bool on_polygon = false;  // lies on the input polygon boundary
        int payload = -1;         // from SubSegment, or polygon side index
        int face_left = -1, face_right = -1;
    };
    struct Face {
        // Boundary as a signed edge chain: outer cycle counterclockwise,
        // hole cycles clockwise. Sum of signed edges is the cellular
        // boundary of the face.
        std::vector<std::pair<int, int>> boundary;  // (edge id, +1/-1)
        std::vector<std::vector<std::pair<int, int>>> cycles;  // outer first
        RVec2 sample;  // strictly interior point
        int holes = 0;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;

    int vertex_id(const RVec2& p) const {
        auto it = vindex_.find(p);
        return it == vindex_.end() ? -1 : it->second;
    }

    // --- construction ---------------------------------------------------
    // polygon: counterclockwise corner list. segments: interior-disjoint.
    Subdivision(const std::vector<RVec2>& polygon, const std::vector<SubSegment>& segments) {
        build(polygon, segments);
    }

private:
    std::map<RVec2, int> vindex_;

    int add_vertex(const RVec2& p) {
        auto [it, fresh] = vindex_.emplace(p, int(vertices.size()));
        if (fresh) vertices.push_back({p});
        return it->second;
    }

    struct Dart {
        int edge;
        int sign;  // +1: v0 -> v1, -1: v1 -> v0
    };

    void build(const std::vector<RVec2>& polygon, const std::vector<SubSegment>& segments) {
        if (polygon.size() < 3) throw std::invalid_argument("Subdivision: degenerate polygon");
        // Vertices: corners first, then segment endpoints.
        for (const RVec2& c : polygon) add_vertex(c);
        for (const auto& s : segments) {
            if (s.a == s.b) throw std::invalid_argument("Subdivision: zero-length segment");
            add_vertex(s.a);
            add_vertex(s.b);
        }
        // Boundary edges: split each polygon side at the vertices lying on it.
        const std::size_t n = polygon.size();
        for (std::size_t i = 0; i < n; ++i) {
            RVec2 c0 = polygon[i], c1 = polygon[(i + 1) % n];
            RVec2 d = c1 - c0;
            std::vector<std::pair<Rational, int>> line;  // (parameter, vertex id)
            for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
                const RVec2& p = vertices[vi].p;
                if (orient2d(c0, c1, p) != 0) continue;
                Rational t = dot2(p - c0, d) / dot2(d, d);
                if (t < 0 || t > 1) continue;
                line.emplace_back(t, int(vi));
            }
            std::sort(line.begin(), line.end());
            for (std::size_t k = 0; k + 1 < line.size(); ++k) {
                Edge e;
                e.v0 = line[k].second;
                e.v1 = line[k + 1].second;
                e.on_polygon = true;
                e.payload = int(i);
                edges.push_back(e);
            }
        }
        for (const auto& s : segments) {
            Edge e;
            e.v0 = vertex_id(s.a);
            e.v1 = vertex_id(s.b);
            e.on_polygon = false;
            e.payload = s.payload;
            edges.push_back(e);
        }

        // Rotation system: darts out of each vertex sorted by exact angle.
        std::vector<std::vector<Dart>> out(vertices.size());
        for (std::size_t ei = 0; ei < edges.size(); ++ei) {
            out[edges[ei].v0].push_back({int(ei), +1});
            out[edges[ei].v1].push_back({int(ei), -1});
        }
        auto dart_dir = [&](const Dart& d) -> RVec2 {
            const Edge& e = edges[d.edge];
            return d.sign > 0 ? vertices[e.v1].p - vertices[e.v0].p
                              : vertices[e.v0].p - vertices[e.v1].p;
        };
        auto half = [](const RVec2& v) {  // 0: upper (y>0 or y==0,x>0), 1: lower
            if (v.y > 0) return 0;
            if (v.y < 0) return 1;
            return v.x > 0 ? 0 : 1;
        };
        for (auto& lst : out) {
            std::sort(lst.begin(), lst.end(), [&](const Dart& a, const Dart& b) {
                RVec2 va = dart_dir(a), vb = dart_dir(b);
                int ha = half(va), hb = half(vb);
                if (ha != hb) return ha < hb;
                int o = sign(cross2(va, vb));
                if (o != 0) return o > 0;  // counterclockwise
                // Equal directions would mean overlapping edges.
                throw std::invalid_argument("Subdivision: overlapping edges at a vertex");
            });
        }
        // position of each dart within its rotation
        std::vector<std::array<int, 2>> pos(edges.size());  // [sign>0], [sign<0]
        for (std::size_t vi = 0; vi < out.size(); ++vi)
            for (std::size_t k = 0; k < out[vi].size(); ++k) {
                const Dart& d = out[vi][k];
                pos[d.edge][d.sign > 0 ? 0 : 1] = int(k);
            }

        auto dart_head = [&](const Dart& d) {
            const Edge& e = edges[d.edge];
            return d.sign > 0 ? e.v1 : e.v0;
        };
        // next dart on the face to the LEFT: reverse the dart, then step
        // clockwise (previous in counterclockwise rotation) at the head.
        auto next_dart = [&](const Dart& d) -> Dart {
            int h = dart_head(d);
            Dart rev{d.edge, -d.sign};
            int k = pos[rev.edge][rev.sign > 0 ? 0 : 1];
            const auto& rot = out[h];
            int prev = (k + int(rot.size()) - 1) % int(rot.size());
            return rot[prev];
        };

        // Extract dart cycles.
        auto dart_index = [&](const Dart& d) { return 2 * d.edge + (d.sign > 0 ? 0 : 1); };
        std::vector<char> used(2 * edges.size(), 0);
        struct Cycle {
            std::vector<Dart> darts;
            Rational area2;  // twice the signed area
        };
        std::vector<Cycle> cycles;
        for (std::size_t ei = 0; ei < edges.size(); ++ei)
            for (int s = +1; s >= -1; s -= 2) {
                Dart d0{int(ei), s};
                if (used[dart_index(d0)]) continue;
                Cycle cyc;
                Dart d = d0;
                do {
                    used[dart_index(d)] = 1;
                    cyc.darts.push_back(d);
                    d = next_dart(d);
                } while (!(d.edge == d0.edge && d.sign == d0.sign));
                Rational a2 = 0;
                for (const Dart& dd : cyc.darts) {
                    const Edge& e = edges[dd.edge];
                    const RVec2& p = dd.sign > 0 ? vertices[e.v0].p : vertices[e.v1].p;
                    const RVec2& q = dd.sign > 0 ? vertices[e.v1].p : vertices[e.v0].p;
                    a2 += cross2(p, q);
                }
                cyc.area2 = a2;
                cycles.push_back(std::move(cyc));
            }

        // The most negative cycle is the outer walk of the polygon; other
        // negative cycles are holes, assigned to the smallest positive cycle
        // containing them.
        int outer = -1;
        for (std::size_t i = 0; i < cycles.size(); ++i)
            if (outer < 0 || cycles[i].area2 < cycles[outer].area2) outer = int(i);
        if (outer < 0 || cycles[outer].area2 >= 0)
            throw std::logic_error("Subdivision: no outer cycle");

        std::vector<int> face_of_cycle(cycles.size(), -1);
        std::vector<int> positive;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            if (int(i) == outer) continue;
            if (cycles[i].area2 > 0) {
                face_of_cycle[i] = int(faces.size());
                positive.push_back(int(i));
                faces.emplace_back();
            } else if (cycles[i].area2 == 0) {
                throw std::logic_error("Subdivision: zero-area cycle");
            }
        }
        auto cycle_contains = [&](int ci, const RVec2& p) {
            // Exact crossing-number parity with the half-open rule.
            int crossings = 0;
            for (const Dart& dd : cycles[ci].darts) {
                const Edge& e = edges[dd.edge];
                RVec2 a = vertices[e.v0].p, b = vertices[e.v1].p;
                if ((a.y > p.y) == (b.y > p.y)) continue;
                // x coordinate of the crossing with the horizontal through p
                Rational t = (p.y - a.y) / (b.y - a.y);
                Rational xx = a.x + t * (b.x - a.x);
                if (xx > p.x) ++crossings;
            }
            return (crossings & 1) == 1;
        };
        auto first_point_of = [&](int ci) {
            const Dart& dd = cycles[ci].darts.front();
            const Edge& e = edges[dd.edge];
            return dd.sign > 0 ? vertices[e.v0].p : vertices[e.v1].p;
        };
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            if (int(i) == outer || cycles[i].area2 > 0) continue;
            RVec2 probe = first_point_of(int(i));
            int best = -1;
            for (int pi : positive) {
                if (!cycle_contains(pi, probe)) continue;
                if (best < 0 || cycles[pi].area2 < cycles[best].area2) best = pi;
            }
            if (best < 0) throw std::logic_error("Subdivision: hole outside every face");
            face_of_cycle[i] = face_of_cycle[best];
            faces[face_of_cycle[best]].holes++;
        }

        // Wait-free assembly of face boundaries and edge sidedness.
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            if (int(i) == outer) continue;
            int fi = face_of_cycle[i];
            std::vector<std::pair<int, int>> cyc;
            for (const Dart& dd : cycles[i].darts) {
                faces[fi].boundary.emplace_back(dd.edge, dd.sign);
                cyc.emplace_back(dd.edge, dd.sign);
                if (dd.sign > 0) edges[dd.edge].face_left = fi;
                else edges[dd.edge].face_right = fi;
            }
            if (cycles[i].area2 > 0) faces[fi].cycles.insert(faces[fi].cycles.begin(), cyc);
            else faces[fi].cycles.push_back(cyc);
        }

        // Interior sample point per face: shoot a ray inward from the
        // midpoint of an outer-cycle dart and stop halfway to the first wall.
        for (auto& f : faces) {
            const auto& [ei, s] = f.cycles.front().front();
            const Edge& e = edges[ei];
            RVec2 a = s > 0 ? vertices[e.v0].p : vertices[e.v1].p;
            RVec2 b = s > 0 ? vertices[e.v1].p : vertices[e.v0].p;
            RVec2 m{(a.x + b.x) / 2, (a.y + b.y) / 2};
            RVec2 dir = b - a;
            RVec2 nrm{-dir.y, dir.x};  // left normal: points into the face
            std::optional<Rational> tmin;
            for (std::size_t k = 0; k < edges.size(); ++k) {
                if (int(k) == ei) continue;
                RVec2 p = vertices[edges[k].v0].p, q = vertices[edges[k].v1].p;
                Rational den = cross2(nrm, q - p);
                if (den == 0) {
                    // Parallel; if collinear consider endpoint parameters.
                    if (orient2d(m, m + nrm, p) == 0) {
                        for (const RVec2& w : {p, q}) {
                            Rational t = dot2(w - m, nrm) / dot2(nrm, nrm);
                            if (t > 0 && (!tmin || t < *tmin)) tmin = t;
                        }
                    }
                    continue;
                }
                Rational t = cross2(p - m, q - p) / den;
                Rational u = cross2(p - m, nrm) / den;
                if (t > 0 && u >= 0 && u <= 1 && (!tmin || t < *tmin)) tmin = t;
            }
            if (!tmin) throw std::logic_error("Subdivision: unbounded face probe");
            f.sample = m + (*tmin / 2) * nrm;
        }
    }
};

}  // namespace exsys
