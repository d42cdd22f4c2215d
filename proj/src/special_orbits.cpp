#include "qflow/special_orbits.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <sstream>

#include "qflow/equivariants.hpp"
#include "qflow/group_s5.hpp"
#include "qflow/invariants.hpp"

namespace qflow {

namespace {

struct Parsed {
    std::string family;                  // "p10", "L1_15", ...
    std::vector<std::vector<int>> groups;  // 0-based indices
    int sheet = 0;
};

[[noreturn]] void bad(const std::string& d, const std::string& why) {
    throw Error(ErrorCode::BadIndices, "descriptor '" + d + "': " + why);
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '_')) out.push_back(tok);
    return out;
}

// Family name -> (group sizes, has sheet, sort groups)
struct Shape {
    std::vector<int> sizes;
    bool sheet;
    bool sort;
};

const std::map<std::string, Shape>& shapes() {
    static const std::map<std::string, Shape> s = {
        {"p5", {{1}, false, true}},        {"p10", {{2}, true, true}},        {"p15", {{1, 2}, false, true}},
        {"p20", {{1, 3}, false, true}},    {"p30", {{2, 2}, false, true}},    {"q20a", {{2}, true, true}},
        {"q20b", {{3}, true, true}},       {"q24", {{4}, false, false}},      {"q30a", {{1, 2}, true, false}},
        {"q30b", {{2, 2}, true, true}},    {"q60", {{1, 2}, true, true}},     {"L1_10", {{2}, false, true}},
        {"M1_10", {{3}, false, true}},     {"L1_15", {{2, 2}, false, true}},  {"M1_15", {{2, 2}, false, true}},
        {"L1_30", {{1, 2}, false, true}},  {"L2_5", {{1}, false, true}},      {"L2_10", {{2}, false, true}},
        {"M2_10", {{2}, false, true}},
    };
    return s;
}

Parsed parse(const std::string& d) {
    auto tok = split(d);
    if (tok.empty()) throw Error(ErrorCode::UnknownDescriptor, "empty descriptor");
    Parsed p;
    std::size_t pos = 1;
    std::string fam = tok[0];
    if (fam == "L1" || fam == "M1" || fam == "L2" || fam == "M2") {
        if (tok.size() < 2) throw Error(ErrorCode::UnknownDescriptor, "unknown descriptor '" + d + "'");
        fam += "_" + tok[1];
        pos = 2;
    }
    std::size_t ngroups_hint = tok.size() - pos;
    if (fam == "q20") fam = (ngroups_hint >= 1 && tok[pos].size() == 3) ? "q20b" : "q20a";
    if (fam == "q30") fam = (ngroups_hint >= 1 && tok[pos].size() == 2) ? "q30b" : "q30a";
    auto it = shapes().find(fam);
    if (it == shapes().end()) throw Error(ErrorCode::UnknownDescriptor, "unknown descriptor '" + d + "'");
    const Shape& sh = it->second;
    p.family = fam;
    std::size_t expected = sh.sizes.size() + (sh.sheet ? 1 : 0);
    if (tok.size() - pos != expected) bad(d, "wrong number of index groups");
    std::vector<bool> used(5, false);
    for (std::size_t g = 0; g < sh.sizes.size(); ++g) {
        const std::string& t = tok[pos + g];
        if (static_cast<int>(t.size()) != sh.sizes[g]) bad(d, "index group '" + t + "' has the wrong size");
        std::vector<int> idx;
        for (char c : t) {
            if (c < '1' || c > '5') bad(d, "indices must be digits 1..5");
            int k = c - '1';
            if (used[k]) bad(d, "repeated index");
            used[k] = true;
            idx.push_back(k);
        }
        if (sh.sort) std::sort(idx.begin(), idx.end());
        p.groups.push_back(idx);
    }
    if (fam == "q24") {
        for (int k : p.groups[0])
            if (k == 4) bad(d, "q24 exponents must be a permutation of 1234");
    }
    if (sh.sheet) {
        const std::string& s = tok.back();
        if (s != "1" && s != "2") bad(d, "sheet must be 1 or 2");
        p.sheet = s[0] - '0';
    }
    return p;
}

std::vector<int> rest(const std::vector<std::vector<int>>& groups) {
    std::vector<bool> used(5, false);
    for (const auto& g : groups)
        for (int k : g) used[k] = true;
    std::vector<int> r;
    for (int k = 0; k < 5; ++k)
        if (!used[k]) r.push_back(k);
    return r;
}

Vec5 e(int i) {
    Vec5 v{};
    v[i] = 1.0;
    return v;
}

Vec5 diff(int i, int j, double sign = -1.0) {
    Vec5 v{};
    v[i] = 1.0;
    v[j] = sign;
    return v;
}

PointU unit(const Vec4& v) {
    double n = 0;
    for (const auto& c : v) n += std::norm(c);
    n = std::sqrt(n);
    PointU p;
    for (int k = 0; k < 4; ++k) p[k] = v[k] / n;
    return p;
}

Complex herm(const Vec4& a, const Vec4& b) {
    Complex s = 0;
    for (int k = 0; k < 4; ++k) s += std::conj(a[k]) * b[k];
    return s;
}

std::string digits(const std::vector<int>& g) {
    std::string s;
    for (int k : g) s += static_cast<char>('1' + k);
    return s;
}

}  // namespace

SpecialPoint point(const std::string& descriptor) {
    Parsed p = parse(descriptor);
    const auto& g = p.groups;
    auto r = rest(g);
    const Complex i(0.0, 1.0);
    SpecialPoint sp;
    sp.descriptor = descriptor;
    Vec5 x{};
    const std::string& f = p.family;
    if (f == "p5") {
        x.fill(1.0);
        x[g[0][0]] = -4.0;
        sp.expected_orbit_size = 5;
        sp.expected_stabilizer_order = 24;
    } else if (f == "p10") {
        if (p.sheet == 1) {
            x[g[0][0]] = 1.0;
            x[g[0][1]] = -1.0;
        } else {
            x.fill(2.0);
            x[g[0][0]] = x[g[0][1]] = -3.0;
        }
        sp.expected_orbit_size = 10;
        sp.expected_stabilizer_order = 12;
    } else if (f == "p15") {
        x.fill(-1.0);
        x[g[0][0]] = 0.0;
        x[g[1][0]] = x[g[1][1]] = 1.0;
        sp.expected_orbit_size = 15;
        sp.expected_stabilizer_order = 8;
    } else if (f == "p20") {
        x.fill(-3.0);
        x[g[0][0]] = 0.0;
        for (int k : g[1]) x[k] = 1.0;
        sp.expected_orbit_size = 20;
        sp.expected_stabilizer_order = 6;
    } else if (f == "p30") {
        x.fill(-2.0);
        for (int k : g[0]) x[k] = 0.0;
        for (int k : g[1]) x[k] = 1.0;
        sp.expected_orbit_size = 30;
        sp.expected_stabilizer_order = 4;
    } else if (f == "q20a") {
        Complex w = p.sheet == 1 ? kOmega3 : std::conj(kOmega3);
        x[r[0]] = 1.0;
        x[r[1]] = w;
        x[r[2]] = w * w;
        sp.expected_orbit_size = 20;
        sp.expected_stabilizer_order = 6;
        sp.on_quadric = true;
    } else if (f == "q20b") {
        Complex a(-1.5, std::sqrt(15.0) / 2.0);
        if (p.sheet == 2) a = std::conj(a);
        for (int k : g[0]) x[k] = 1.0;
        x[r[0]] = a;
        x[r[1]] = std::conj(a);
        sp.expected_orbit_size = 20;
        sp.expected_stabilizer_order = 6;
        sp.on_quadric = true;
    } else if (f == "q24") {
        x[0] = 1.0;
        for (int k = 0; k < 4; ++k) x[k + 1] = std::pow(kOmega5, g[0][k] + 1);
        sp.expected_orbit_size = 24;
        sp.expected_stabilizer_order = 5;
        sp.on_quadric = true;
    } else if (f == "q30a") {
        x[g[1][0]] = 1.0;
        x[g[1][1]] = -1.0;
        Complex s = p.sheet == 1 ? i : -i;
        x[r[0]] = s;
        x[r[1]] = -s;
        sp.expected_orbit_size = 30;
        sp.expected_stabilizer_order = 4;
        sp.on_quadric = true;
    } else if (f == "q30b") {
        Complex b(-2.0 / 3.0, kSqrt5 / 3.0);
        if (p.sheet == 2) b = std::conj(b);
        for (int k : g[0]) x[k] = 1.0;
        for (int k : g[1]) x[k] = b;
        x[r[0]] = -2.0 * (1.0 + b);
        sp.expected_orbit_size = 30;
        sp.expected_stabilizer_order = 4;
        sp.on_quadric = true;
    } else if (f == "q60") {
        Complex c(-1.0, std::sqrt(2.0));
        if (p.sheet == 2) c = std::conj(c);
        x[g[1][0]] = x[g[1][1]] = 1.0;
        x[r[0]] = c;
        x[r[1]] = std::conj(c);
        sp.expected_orbit_size = 60;
        sp.expected_stabilizer_order = 2;
        sp.on_quadric = true;
    } else {
        throw Error(ErrorCode::UnknownDescriptor, "'" + descriptor + "' is not a point descriptor");
    }
    sp.x = PointX{x};
    return sp;
}

SpecialPlane plane(const std::string& descriptor) {
    Parsed p = parse(descriptor);
    const auto& g = p.groups;
    SpecialPlane pl;
    pl.descriptor = descriptor;
    if (p.family == "L2_5") {
        pl.form_x = e(g[0][0]);
        pl.corresponding_point = "p5_" + digits(g[0]);
        pl.expected_orbit_size = 5;
    } else if (p.family == "L2_10") {
        pl.form_x = diff(g[0][0], g[0][1]);
        pl.corresponding_point = "p10_" + digits(g[0]) + "_1";
        pl.expected_orbit_size = 10;
    } else if (p.family == "M2_10") {
        pl.form_x = diff(g[0][0], g[0][1], 1.0);
        pl.corresponding_point = "p10_" + digits(g[0]) + "_2";
        pl.expected_orbit_size = 10;
    } else {
        throw Error(ErrorCode::UnknownDescriptor, "'" + descriptor + "' is not a plane descriptor");
    }
    pl.form_u = plane_form_from_x(pl.form_x);
    return pl;
}

SpecialLine line_from_forms(const std::vector<Vec4>& forms, std::string descriptor) {
    Eigen::Matrix<Complex, Eigen::Dynamic, 4> m(static_cast<Eigen::Index>(forms.size()), 4);
    for (std::size_t r = 0; r < forms.size(); ++r)
        for (int c = 0; c < 4; ++c) m(static_cast<Eigen::Index>(r), c) = forms[r][c];
    Eigen::FullPivLU<Eigen::Matrix<Complex, Eigen::Dynamic, 4>> lu(m);
    lu.setThreshold(1e-10);
    auto ker = lu.kernel();
    if (ker.cols() != 2) throw Error(ErrorCode::Degenerate, "linear forms do not cut out a line");
    Vec4 a, b;
    for (int k = 0; k < 4; ++k) {
        a[k] = ker(k, 0);
        b[k] = ker(k, 1);
    }
    return line_through(PointU{a}, PointU{b}, std::move(descriptor));
}

SpecialLine line_through(const PointU& p, const PointU& q, std::string descriptor) {
    PointU e1 = unit(p.c);
    Vec4 r = q.c;
    Complex h = herm(e1.c, r);
    for (int k = 0; k < 4; ++k) r[k] -= h * e1[k];
    if (norm(r) < 1e-12 * norm(q.c)) throw Error(ErrorCode::AnchorsCoincide, "points do not span a line");
    SpecialLine l;
    l.descriptor = std::move(descriptor);
    l.span = {e1, unit(r)};
    return l;
}

SpecialLine line(const std::string& descriptor) {
    Parsed p = parse(descriptor);
    const auto& g = p.groups;
    std::vector<Vec5> fx;
    int size = 0;
    if (p.family == "L1_10") {
        fx = {e(g[0][0]), e(g[0][1])};
        size = 10;
    } else if (p.family == "M1_10") {
        fx = {diff(g[0][0], g[0][1]), diff(g[0][1], g[0][2])};
        size = 10;
    } else if (p.family == "L1_15") {
        fx = {diff(g[0][0], g[0][1]), diff(g[1][0], g[1][1])};
        size = 15;
    } else if (p.family == "M1_15") {
        fx = {diff(g[0][0], g[0][1], 1.0), diff(g[1][0], g[1][1], 1.0)};
        size = 15;
    } else if (p.family == "L1_30") {
        fx = {e(g[0][0]), diff(g[1][0], g[1][1])};
        size = 30;
    } else {
        throw Error(ErrorCode::UnknownDescriptor, "'" + descriptor + "' is not a line descriptor");
    }
    std::vector<Vec4> fu;
    for (const auto& f : fx) fu.push_back(plane_form_from_x(f));
    SpecialLine l = line_from_forms(fu, descriptor);
    l.expected_orbit_size = size;
    return l;
}

double line_residual(const SpecialLine& l, const PointU& p) {
    double n = norm(p.c);
    if (n == 0) throw Error(ErrorCode::ZeroVector, "zero point");
    Vec4 r = p.c;
    for (const auto& s : l.span) {
        Complex h = herm(s.c, p.c);
        for (int k = 0; k < 4; ++k) r[k] -= h * s[k];
    }
    return norm(r) / n;
}

bool on_line(const SpecialLine& l, const PointU& p, double tol) { return line_residual(l, p) < tol; }

double plane_residual(const SpecialPlane& pl, const PointU& p) {
    return std::abs(dot(pl.form_u, p.c)) / (norm(pl.form_u) * norm(p.c));
}

bool same_line(const SpecialLine& a, const SpecialLine& b, double tol) {
    return line_residual(a, b.span[0]) < tol && line_residual(a, b.span[1]) < tol;
}

SpecialLine ruling_line(const PointU& p, bool a_family) {
    RulingCoords rc = ruling_coords(p);
    auto forms = a_family ? a_line_forms(rc.a) : b_line_forms(rc.b);
    return line_from_forms({forms[0], forms[1]}, a_family ? "a-line" : "b-line");
}

std::vector<SpecialLine> line_orbit(const SpecialLine& l, double tol) {
    std::vector<SpecialLine> out;
    for (const auto& g : all_elements()) {
        SpecialLine img = line_through(g.apply(l.span[0]), g.apply(l.span[1]), l.descriptor);
        bool seen = false;
        for (const auto& o : out)
            if (same_line(o, img, tol)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(img);
    }
    return out;
}

// ---------------------------------------------------------------- families

namespace {

// All ordered tuples of distinct indices split into groups of the given sizes.
void tuples(const std::vector<int>& sizes, std::vector<std::vector<int>>& cur, std::vector<bool>& used,
            std::vector<std::vector<std::vector<int>>>& out, std::size_t g, std::vector<int> partial) {
    if (g == sizes.size()) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(partial.size()) == sizes[g]) {
        cur.push_back(partial);
        tuples(sizes, cur, used, out, g + 1, {});
        cur.pop_back();
        return;
    }
    for (int k = 0; k < 5; ++k) {
        if (used[k]) continue;
        used[k] = true;
        auto next = partial;
        next.push_back(k);
        tuples(sizes, cur, used, out, g, next);
        used[k] = false;
    }
}

std::vector<std::string> descriptors_of(const std::string& prefix, const std::vector<int>& sizes, bool sheet,
                                        bool ordered) {
    std::vector<std::vector<std::vector<int>>> all;
    std::vector<std::vector<int>> cur;
    std::vector<bool> used(5, false);
    tuples(sizes, cur, used, all, 0, {});
    std::vector<std::string> out;
    for (const auto& t : all) {
        bool ok = true;
        if (!ordered)
            for (const auto& grp : t)
                if (!std::is_sorted(grp.begin(), grp.end())) ok = false;
        if (!ok) continue;
        std::string d = prefix;
        for (const auto& grp : t) d += "_" + digits(grp);
        if (sheet) {
            out.push_back(d + "_1");
            out.push_back(d + "_2");
        } else {
            out.push_back(d);
        }
    }
    return out;
}

struct FamilySpec {
    std::string prefix;
    std::vector<int> sizes;
    bool sheet;
    bool ordered;
};

const std::map<std::string, FamilySpec>& point_family_specs() {
    static const std::map<std::string, FamilySpec> m = {
        {"p5", {"p5", {1}, false, false}},         {"p10_1", {"p10", {2}, false, false}},
        {"p10_2", {"p10", {2}, false, false}},     {"p15", {"p15", {1, 2}, false, false}},
        {"p20", {"p20", {1, 3}, false, false}},    {"p30", {"p30", {2, 2}, false, false}},
        {"q20_1", {"q20", {2}, true, false}},      {"q20_2", {"q20", {3}, true, false}},
        {"q24", {"q24", {4}, false, true}},        {"q30_1", {"q30", {1, 2}, true, true}},
        {"q30_2", {"q30", {2, 2}, true, false}},   {"q60", {"q60", {1, 2}, true, false}},
    };
    return m;
}

}  // namespace

std::vector<std::string> point_families() {
    return {"p5", "p10_1", "p10_2", "p15", "p20", "p30", "q20_1", "q20_2", "q24", "q30_1", "q30_2", "q60"};
}

std::vector<SpecialPoint> family_points(const std::string& family) {
    auto it = point_family_specs().find(family);
    if (it == point_family_specs().end())
        throw Error(ErrorCode::UnknownDescriptor, "unknown point family '" + family + "'");
    const FamilySpec& fs = it->second;
    std::vector<std::string> ds = descriptors_of(fs.prefix, fs.sizes, fs.sheet, fs.ordered);
    if (family == "p10_1" || family == "p10_2") {
        std::string s = family == "p10_1" ? "_1" : "_2";
        for (auto& d : ds) d += s;
    }
    if (family == "q24") {
        // exponents are a permutation of 1..4: drop tuples that use index 5
        ds.erase(std::remove_if(ds.begin(), ds.end(), [](const std::string& d) { return d.find('5') != std::string::npos; }),
                 ds.end());
    }
    std::vector<SpecialPoint> out;
    for (const auto& d : ds) {
        SpecialPoint sp = point(d);
        bool seen = false;
        for (const auto& o : out)
            if (chordal_distance(o.x, sp.x) < 1e-9) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(sp);
    }
    return out;
}

std::vector<std::string> line_families() { return {"L1_10", "M1_10", "L1_15", "M1_15", "L1_30"}; }

std::vector<SpecialLine> family_lines(const std::string& family) {
    std::vector<std::string> ds;
    if (family == "L1_10") ds = descriptors_of("L1_10", {2}, false, false);
    else if (family == "M1_10") ds = descriptors_of("M1_10", {3}, false, false);
    else if (family == "L1_15") ds = descriptors_of("L1_15", {2, 2}, false, false);
    else if (family == "M1_15") ds = descriptors_of("M1_15", {2, 2}, false, false);
    else if (family == "L1_30") ds = descriptors_of("L1_30", {1, 2}, false, false);
    else throw Error(ErrorCode::UnknownDescriptor, "unknown line family '" + family + "'");
    std::vector<SpecialLine> out;
    for (const auto& d : ds) {
        SpecialLine l = line(d);
        bool seen = false;
        for (const auto& o : out)
            if (same_line(o, l)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(l);
    }
    return out;
}

std::vector<std::string> plane_families() { return {"L2_5", "L2_10", "M2_10"}; }

std::vector<SpecialPlane> family_planes(const std::string& family) {
    std::vector<std::string> ds;
    if (family == "L2_5") ds = descriptors_of("L2_5", {1}, false, false);
    else if (family == "L2_10") ds = descriptors_of("L2_10", {2}, false, false);
    else if (family == "M2_10") ds = descriptors_of("M2_10", {2}, false, false);
    else throw Error(ErrorCode::UnknownDescriptor, "unknown plane family '" + family + "'");
    std::vector<SpecialPlane> out;
    for (const auto& d : ds) out.push_back(plane(d));
    return out;
}

// ---------------------------------------------------------------- configuration report

namespace {

void add(std::vector<ConfigCheck>& out, std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
}

std::string str(std::size_t n) { return std::to_string(n); }

int count_on(const SpecialLine& l, const std::vector<SpecialPoint>& pts) {
    int c = 0;
    for (const auto& p : pts)
        if (on_line(l, p.u())) ++c;
    return c;
}

}  // namespace

std::vector<ConfigCheck> verify_configuration() {
    std::vector<ConfigCheck> out;

    for (const auto& fam : point_families()) {
        auto pts = family_points(fam);
        const SpecialPoint& rep = pts.front();
        auto orb = orbit(rep.u());
        int stab = stabilizer_order(rep.u());
        add(out, "points " + fam + " orbit size", static_cast<int>(orb.size()) == rep.expected_orbit_size,
            str(orb.size()) + " (expected " + std::to_string(rep.expected_orbit_size) + ")");
        add(out, "points " + fam + " stabilizer order", stab == rep.expected_stabilizer_order,
            std::to_string(stab) + " (expected " + std::to_string(rep.expected_stabilizer_order) + ")");
        bool all_in = static_cast<int>(pts.size()) == rep.expected_orbit_size;
        for (const auto& p : pts) {
            bool found = false;
            for (const auto& q : orb)
                if (chordal_distance(q, p.u()) < 1e-9) found = true;
            all_in = all_in && found;
        }
        add(out, "points " + fam + " descriptors enumerate the orbit", all_in, str(pts.size()) + " descriptors");
        if (rep.on_quadric) {
            double worst = 0;
            for (const auto& p : pts) {
                PointX xn = normalize(p.x);
                worst = std::max(worst, std::abs(power_sum(xn, 2)));
            }
            add(out, "points " + fam + " lie on the quadric", worst < 1e-12, "max |F2| = " + std::to_string(worst));
        }
    }

    for (const auto& fam : line_families()) {
        auto ls = family_lines(fam);
        auto orb = line_orbit(ls.front());
        int expected = ls.front().expected_orbit_size;
        add(out, "lines " + fam + " orbit size", static_cast<int>(orb.size()) == expected && static_cast<int>(ls.size()) == expected,
            str(orb.size()) + " images, " + str(ls.size()) + " descriptors (expected " + std::to_string(expected) + ")");
    }
    for (const auto& fam : plane_families()) {
        auto ps = family_planes(fam);
        bool ok = static_cast<int>(ps.size()) == ps.front().expected_orbit_size;
        // each plane is pointwise fixed or mapped to itself by the stabilizer of its point
        for (const auto& pl : ps) {
            SpecialPoint cp = point(pl.corresponding_point);
            int stab = stabilizer_order(cp.u());
            ok = ok && (120 / stab == pl.expected_orbit_size);
        }
        add(out, "planes " + fam + " orbit size", ok, str(ps.size()) + " planes");
    }

    auto p5 = family_points("p5");
    auto p10b = family_points("p10_2");
    auto l15 = family_lines("L1_15");
    auto m10 = family_lines("M1_10");

    bool ok = true;
    for (const auto& p : p5) {
        int c = 0;
        for (const auto& l : l15)
            if (on_line(l, p.u())) ++c;
        ok = ok && c == 3;
    }
    add(out, "three 15-lines through each 5-point", ok, "");
    ok = true;
    for (const auto& l : l15) ok = ok && count_on(l, p5) == 1;
    add(out, "one 5-point on each 15-line", ok, "");
    ok = true;
    for (const auto& p : p10b) {
        int c = 0;
        for (const auto& l : l15)
            if (on_line(l, p.u())) ++c;
        ok = ok && c == 3;
    }
    add(out, "three 15-lines through each 10-point of the second kind", ok, "");
    ok = true;
    for (const auto& l : l15) {
        ok = ok && count_on(l, p10b) == 2;
        // the two are p10_ij_2 and p10_kl_2 for L1_15_ij_kl
        auto tok = split(l.descriptor);
        ok = ok && on_line(l, point("p10_" + tok[2] + "_2").u()) && on_line(l, point("p10_" + tok[3] + "_2").u());
    }
    add(out, "two 10-points on each 15-line", ok, "");
    ok = true;
    for (std::size_t a = 0; a < p5.size(); ++a)
        for (std::size_t b = a + 1; b < p5.size(); ++b) {
            int c = 0;
            for (const auto& l : m10)
                if (on_line(l, p5[a].u()) && on_line(l, p5[b].u())) ++c;
            ok = ok && c == 1;
        }
    for (const auto& l : m10) ok = ok && count_on(l, p5) == 2;
    add(out, "10-lines form a complete graph on the 5-points", ok, "");

    struct QuadricOrbit {
        const char* rep;
        std::size_t size;
    };
    for (const auto& q : {QuadricOrbit{"q20_12_1", 40}, QuadricOrbit{"q24_1234", 24}, QuadricOrbit{"q30_1_24_1", 60}}) {
        SpecialLine l = ruling_line(point(q.rep).u(), true);
        auto orb = line_orbit(l);
        add(out, std::string("quadric line orbit through ") + q.rep, orb.size() == q.size,
            str(orb.size()) + " (expected " + str(q.size) + ")");
    }
    return out;
}

}  // namespace qflow
