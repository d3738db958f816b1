#include "spinetorsion/invariance.hpp"

#include <algorithm>

#include "spinetorsion/io.hpp"

namespace spinetorsion {

namespace {

// Index of the 3-side tetrahedron holding all bipyramid vertices in `verts`.
int three_tet_with(const Bipyramid& b, const std::vector<int>& verts) {
  for (int j = 0; j < 3; ++j) {
    bool ok = true;
    for (int v : verts)
      if (b.three_labels[j][v] < 0) ok = false;
    if (ok) return j;
  }
  return -1;
}

int site_index(const Bipyramid& b, int tet) {
  for (int k = 0; k < 2; ++k)
    if (b.two_tets[k] == tet) return k;
  return -1;
}

int bip_vertex(const std::array<int, 5>& lab, int label) {
  for (int v = 0; v < 5; ++v)
    if (lab[v] == label) return v;
  return -1;
}

struct Sides {
  CellComplexX x;
  GroupData g;
  SpiderAnchors anchors;
};

Sides sides_of(const BranchedSpine& sp) {
  Sides s{build_complex(sp), {}, {}};
  s.g = presentation(s.x, sp);
  s.anchors = spider_anchors(sp, s.x, s.g);
  return s;
}

template <class F>
bool same_up_to_sign(const F& a, const F& b) {
  return a == b || a == -b;
}

template <class F>
F torsion_of(const TwistedComplex<F>& tc, const std::optional<HomologyBases<F>>& h) {
  return torsion0(tc, h ? &*h : nullptr);
}

template <class F>
InvarianceReport run(const BranchedSpine& spine, const std::vector<MoveInstance>& walk, const Representation& rep,
                     const std::string& field) {
  InvarianceReport out;
  out.representation = rep.describe();
  out.field = field;
  Sides cur_sides = sides_of(spine);
  std::vector<F> images = generator_images<F>(rep, spine.num_edges());
  std::vector<Rational> ones(spine.num_edges(), Rational(1));
  auto tc = twisted_complex<F>(spine, cur_sides.anchors, images);
  auto un = twisted_complex<Rational>(spine, cur_sides.anchors, ones);
  std::optional<HomologyBases<F>> h;
  if (!is_acyclic(tc)) h = default_homology_bases(tc);
  std::optional<HomologyBases<Rational>> o = default_homology_bases(un);
  F value = torsion_of(tc, h);
  F refined = sign_refined_torsion0(tc, h ? &*h : nullptr, un, *o);
  out.initial_value = value.up_to_sign().to_string();
  out.initial_sign_refined = refined.to_string();
  out.initial_acyclic = is_acyclic(tc);
  out.initial_chi_spine = euler_characteristics(spine).spine;

  std::string cur_text = serialize_spine(spine);
  for (std::size_t s = 0; s < walk.size(); ++s) {
    const MoveInstance& m = walk[s];
    if (serialize_spine(m.before) != cur_text)
      throw SpineError(ErrorCode::InvalidArgument, "walk step " + std::to_string(s) + " does not start where the previous ended");
    if (!h_cycle_check(m).is_null)
      throw SpineError(ErrorCode::InvalidArgument, "walk step " + std::to_string(s) + " has a non-null h-table");
    InvarianceStep step;
    step.move = m.record();
    const CellCorrespondence corr = cell_correspondence(m);
    Sides next_sides = sides_of(m.after);
    std::vector<F> next_images = transport_images(m, corr, images);
    std::vector<Rational> next_ones(m.after.num_edges(), Rational(1));
    auto next_tc = twisted_complex<F>(m.after, next_sides.anchors, next_images);
    auto next_un = twisted_complex<Rational>(m.after, next_sides.anchors, next_ones);
    step.acyclic = is_acyclic(next_tc);
    step.chi_spine = euler_characteristics(m.after).spine;

    const Sides& two_sides = m.positive ? cur_sides : next_sides;
    const auto& two_images = m.positive ? images : next_images;
    const auto& tc2 = m.positive ? tc : next_tc;
    const auto& tc3 = m.positive ? next_tc : tc;
    const auto& un2 = m.positive ? un : next_un;
    const auto& un3 = m.positive ? next_un : un;
    const std::vector<Rational> ones2(m.two_side().num_edges(), Rational(1));
    auto map = chain_map(m, corr, two_sides.anchors, two_images, tc2, tc3);
    auto umap = chain_map(m, corr, two_sides.anchors, ones2, un2, un3);

    std::optional<HomologyBases<F>> next_h;
    bool h_ok = true;
    if (!step.acyclic) {
      if (h) next_h = transport_bases(m, map, tc, next_tc, *h);
      if (!next_h) {
        h_ok = false;
        step.note = "TransportFailure: twisted homology basis";
        next_h = default_homology_bases(next_tc);
      }
    }
    auto next_o = transport_bases(m, umap, un, next_un, *o);
    bool o_ok = next_o.has_value();
    if (!o_ok) {
      step.note += std::string(step.note.empty() ? "" : "; ") + "TransportFailure: homological orientation";
      next_o = default_homology_bases(next_un);
    }
    if (!h_ok || !o_ok) ++out.transport_failures;

    F next_value = torsion_of(next_tc, next_h);
    step.value = next_value.up_to_sign().to_string();
    step.equal_up_to_sign = h_ok && same_up_to_sign(value, next_value);
    F next_refined = sign_refined_torsion0(next_tc, next_h ? &*next_h : nullptr, next_un, *next_o);
    step.sign_refined = next_refined.to_string();
    if (h_ok && o_ok) {
      step.sign_refined_checked = true;
      step.sign_refined_equal = next_refined == refined;
      ++out.sign_refined_checked;
      if (!step.sign_refined_equal) out.sign_refined_all_equal = false;
    }
    if (h_ok && !step.equal_up_to_sign && out.first_violation < 0) out.first_violation = static_cast<int>(s);
    if (h_ok && !step.equal_up_to_sign) out.all_equal = false;

    out.steps.push_back(step);
    cur_sides = std::move(next_sides);
    images = std::move(next_images);
    tc = std::move(next_tc);
    un = std::move(next_un);
    h = std::move(next_h);
    o = std::move(next_o);
    value = next_value;
    refined = next_refined;
    cur_text = serialize_spine(m.after);
  }
  return out;
}

}  // namespace

CellCorrespondence cell_correspondence(const MoveInstance& m) {
  const BranchedSpine& s2 = m.two_side();
  const BranchedSpine& s3 = m.three_side();
  const Bipyramid& b = m.bipyramid;
  CellCorrespondence c;
  c.tets = b.tet_map;
  for (int e = 0; e < s2.num_edges(); ++e) {
    const EdgeInstance& in = s2.skeleton().edges[e][0];
    const int k = site_index(b, in.tet);
    if (k < 0) {
      c.edges.push_back(s3.edge_class(b.tet_map[in.tet], in.a, in.b));
      continue;
    }
    const int u = bip_vertex(b.two_labels[k], in.a), v = bip_vertex(b.two_labels[k], in.b);
    const int j = three_tet_with(b, {u, v});
    c.edges.push_back(s3.edge_class(b.three_tets[j], b.three_labels[j][u], b.three_labels[j][v]));
  }
  for (int f = 0; f < s2.num_faces(); ++f) {
    const FaceSide& side = s2.skeleton().faces[f][0];
    const int k = site_index(b, side.tet);
    if (k < 0) {
      c.faces.push_back(s3.face_class(b.tet_map[side.tet], side.face));
      continue;
    }
    const int opp = bip_vertex(b.two_labels[k], side.face);
    if (opp == kX || opp == kY) {
      c.inner_face = f;
      c.faces.push_back(-1);
      continue;
    }
    std::vector<int> verts;
    for (int v = 0; v < 5; ++v)
      if (b.two_labels[k][v] >= 0 && v != opp) verts.push_back(v);
    const int j = three_tet_with(b, verts);
    int missing = -1;
    for (int v = 0; v < 5; ++v)
      if (b.three_labels[j][v] >= 0 && std::find(verts.begin(), verts.end(), v) == verts.end()) missing = v;
    c.faces.push_back(s3.face_class(b.three_tets[j], b.three_labels[j][missing]));
  }
  c.central_edge = s3.edge_class(b.three_tets[0], b.three_labels[0][kX], b.three_labels[0][kY]);
  return c;
}

InvarianceReport invariance_suite(const BranchedSpine& spine, const std::vector<MoveInstance>& walk,
                                  const RepSpec& rep) {
  const CellComplexX x = build_complex(spine);
  const GroupData g = presentation(x, spine);
  const Representation r = make_representation(g, rep);
  switch (r.kind) {
    case Representation::Kind::FreeAbelian: {
      std::string field = "Q";
      for (int i = 1; i <= r.variables; ++i) field += (i > 1 ? ",t" : "(t") + std::to_string(i);
      return run<RatFunc>(spine, walk, r, r.variables ? field + ")" : field);
    }
    case Representation::Kind::Cyclic:
      return run<Cyclotomic>(spine, walk, r, "Q(z_" + std::to_string(r.order) + ")");
    case Representation::Kind::Trivial:
      break;
  }
  return run<Rational>(spine, walk, r, "Q");
}

}  // namespace spinetorsion
