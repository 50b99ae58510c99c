#include "dessinlab/dessin.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace dessinlab {

CleanDessin::CleanDessin(Permutation s, Permutation a, Permutation f)
    : sigma_(std::move(s)), alpha_(std::move(a)), phi_(std::move(f)) {
    const int darts = sigma_.size();
    edge_index_.assign(darts, -1);
    for (int k = 0; k < darts; ++k) {
        const int partner = alpha_.apply0(k);
        if (k < partner) {
            edge_index_[k] = edge_index_[partner] = static_cast<int>(edges_.size());
            edges_.emplace_back(k + 1, partner + 1);
        }
    }
}

CleanDessin CleanDessin::make(Permutation sigma, Permutation alpha) {
    if (sigma.size() != alpha.size())
        throw validation_error("dessin: sigma and alpha must share a domain");
    if (sigma.size() % 2 != 0)
        throw validation_error("dessin: dart count must be even");
    if (!is_fpf_involution(alpha))
        throw validation_error("dessin: alpha is not a fixed-point-free involution");
    if (!is_transitive({sigma, alpha}))
        throw validation_error("dessin: <sigma, alpha> is not transitive");
    Permutation phi = inverse(compose(sigma, alpha));
    return CleanDessin(std::move(sigma), std::move(alpha), std::move(phi));
}

Passport CleanDessin::passport() const {
    Passport p;
    p.black_degrees = cycle_type(sigma_);
    p.face_degrees = cycle_type(phi_);
    p.edge_count = edge_count();
    // Euler-Poincare: (#black + n) - 2n + #faces = 2 - 2g.
    const int chi = static_cast<int>(p.black_degrees.size()) - p.edge_count +
                    static_cast<int>(p.face_degrees.size());
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw invariant_violation("dessin: Euler characteristic " + std::to_string(chi) +
                                  " does not give a non-negative integer genus");
    p.genus = (2 - chi) / 2;
    return p;
}

EdgeRef CleanDessin::classify_edge(int dart) const {
    if (dart < 1 || dart > dart_count())
        throw validation_error("dart index " + std::to_string(dart) + " out of range");
    const int i = dart;
    const int j = alpha_.apply(dart);
    EdgeRef e;
    e.dart_low = std::min(i, j);
    e.dart_high = std::max(i, j);
    e.leaf = sigma_.apply(i) == i || sigma_.apply(j) == j;
    e.trivial_loop = phi_.apply(i) == i || phi_.apply(j) == j;
    // loop: both darts in one sigma-cycle
    int x = sigma_.apply(i);
    bool loop = false;
    while (x != i) {
        if (x == j) { loop = true; break; }
        x = sigma_.apply(x);
    }
    e.loop = loop;
    return e;
}

int CleanDessin::edge_of_dart(int dart) const {
    if (dart < 1 || dart > dart_count())
        throw validation_error("dart index " + std::to_string(dart) + " out of range");
    return edge_index_[dart - 1];
}

namespace {

// Relabeling map for one root: darts renamed in discovery order of the
// traversal that visits, for each dart in new-label order, first its
// sigma-image and then its alpha-image. Equivariant under conjugation.
void relabel_from_root(const Permutation& sigma, const Permutation& alpha, int root,
                       std::vector<int>& new_label, std::vector<int>& old_label) {
    const int n = sigma.size();
    new_label.assign(n, -1);
    old_label.assign(n, -1);
    new_label[root] = 0;
    old_label[0] = root;
    int assigned = 1;
    for (int q = 0; q < assigned; ++q) {
        const int x = old_label[q];
        for (const int y : {sigma.apply0(x), alpha.apply0(x)}) {
            if (new_label[y] < 0) {
                new_label[y] = assigned;
                old_label[assigned] = y;
                ++assigned;
            }
        }
    }
}

void encode_relabeled(const Permutation& sigma, const Permutation& alpha,
                      const std::vector<int>& new_label, const std::vector<int>& old_label,
                      CanonicalForm& out) {
    const int n = sigma.size();
    out.resize(2 * n);
    for (int k = 0; k < n; ++k) {
        out[k] = static_cast<std::uint16_t>(new_label[sigma.apply0(old_label[k])] + 1);
        out[n + k] = static_cast<std::uint16_t>(new_label[alpha.apply0(old_label[k])] + 1);
    }
}

} // namespace

CanonicalForm canonical_form(const CleanDessin& d) {
    const int n = d.dart_count();
    CanonicalForm best, cur;
    std::vector<int> new_label, old_label;
    for (int root = 0; root < n; ++root) {
        relabel_from_root(d.sigma(), d.alpha(), root, new_label, old_label);
        encode_relabeled(d.sigma(), d.alpha(), new_label, old_label, cur);
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

std::string canonical_digest(const CleanDessin& d) {
    const CanonicalForm form = canonical_form(d);
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint16_t v : form) {
        h = (h ^ (v & 0xff)) * 1099511628211ull;
        h = (h ^ (v >> 8)) * 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

CleanDessin dessin_from_canonical(const CanonicalForm& form) {
    const int n = static_cast<int>(form.size()) / 2;
    std::vector<int> sim(n), aim(n);
    for (int k = 0; k < n; ++k) {
        sim[k] = form[k] - 1;
        aim[k] = form[n + k] - 1;
    }
    return CleanDessin::make(Permutation::from_images(std::move(sim)),
                             Permutation::from_images(std::move(aim)));
}

bool is_isomorphic(const CleanDessin& a, const CleanDessin& b) {
    if (a.dart_count() != b.dart_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::optional<Permutation> find_conjugator(const CleanDessin& a, const CleanDessin& b) {
    if (a.dart_count() != b.dart_count()) return std::nullopt;
    const int n = a.dart_count();
    CanonicalForm best_a, best_b, cur;
    std::vector<int> rho_a, rho_b; // old -> new for the minimizing roots
    std::vector<int> new_label, old_label;
    for (int root = 0; root < n; ++root) {
        relabel_from_root(a.sigma(), a.alpha(), root, new_label, old_label);
        encode_relabeled(a.sigma(), a.alpha(), new_label, old_label, cur);
        if (best_a.empty() || cur < best_a) {
            best_a = cur;
            rho_a = new_label;
        }
        relabel_from_root(b.sigma(), b.alpha(), root, new_label, old_label);
        encode_relabeled(b.sigma(), b.alpha(), new_label, old_label, cur);
        if (best_b.empty() || cur < best_b) {
            best_b = cur;
            rho_b = new_label;
        }
    }
    if (best_a != best_b) return std::nullopt;
    // sigma_a^{rho_a} = sigma_b^{rho_b}, so g = rho_a * rho_b^{-1} conjugates a to b.
    const Permutation pa = Permutation::from_images(rho_a);
    const Permutation pb = Permutation::from_images(rho_b);
    return compose(pa, inverse(pb));
}

CleanDessin conjugate(const CleanDessin& d, const Permutation& g) {
    return CleanDessin::make(conjugate(d.sigma(), g), conjugate(d.alpha(), g));
}

bool PassportFilter::matches(const Passport& p) const {
    if (genus && *genus != p.genus) return false;
    if (black_count && *black_count != static_cast<int>(p.black_degrees.size())) return false;
    if (face_count && *face_count != static_cast<int>(p.face_degrees.size())) return false;
    if (face_degrees) {
        auto want = *face_degrees;
        std::sort(want.begin(), want.end(), std::greater<>());
        if (want != p.face_degrees) return false;
    }
    if (black_degrees) {
        auto want = *black_degrees;
        std::sort(want.begin(), want.end(), std::greater<>());
        if (want != p.black_degrees) return false;
    }
    return true;
}

Permutation standard_pairing(int edge_count) {
    std::vector<int> im(2 * edge_count);
    for (int k = 0; k < edge_count; ++k) {
        im[2 * k] = 2 * k + 1;
        im[2 * k + 1] = 2 * k;
    }
    return Permutation::from_images(std::move(im));
}

std::vector<CleanDessin> enumerate_dessins(int edge_count, const PassportFilter& filter,
                                           const EnumerationLimits& limits) {
    if (edge_count < 1)
        throw validation_error("enumerate: edge count must be positive");
    if (edge_count > limits.max_edges)
        throw resource_limit_error("enumerate: edge count " + std::to_string(edge_count) +
                                   " exceeds bound " + std::to_string(limits.max_edges));
    const int darts = 2 * edge_count;
    const Permutation alpha = standard_pairing(edge_count);

    std::map<CanonicalForm, bool> classes; // canonical form -> filter match
    std::vector<int> sim(darts);
    for (int k = 0; k < darts; ++k) sim[k] = k;

    std::vector<int> new_label, old_label;
    CanonicalForm best, cur;
    do {
        const Permutation sigma = Permutation::from_images(sim);
        if (!is_transitive({sigma, alpha})) continue;
        best.clear();
        for (int root = 0; root < darts; ++root) {
            relabel_from_root(sigma, alpha, root, new_label, old_label);
            encode_relabeled(sigma, alpha, new_label, old_label, cur);
            if (best.empty() || cur < best) best = cur;
        }
        classes.emplace(best, false);
    } while (std::next_permutation(sim.begin(), sim.end()));

    std::vector<CleanDessin> out;
    for (const auto& [form, _] : classes) {
        CleanDessin d = dessin_from_canonical(form);
        if (filter.matches(d.passport())) out.push_back(std::move(d));
    }
    return out;
}

CleanDessin clean_cover(const Permutation& sigma, const Permutation& alpha) {
    if (sigma.size() != alpha.size())
        throw validation_error("clean_cover: domain mismatch");
    if (!is_transitive({sigma, alpha}))
        throw validation_error("clean_cover: <sigma, alpha> is not transitive");
    const int n = sigma.size();
    // Copy one carries sigma, copy two carries alpha; the new pairing joins
    // the two copies of each input dart.
    std::vector<int> sim(2 * n), aim(2 * n);
    for (int k = 0; k < n; ++k) {
        sim[k] = sigma.apply0(k);
        sim[n + k] = n + alpha.apply0(k);
        aim[k] = n + k;
        aim[n + k] = k;
    }
    return CleanDessin::make(Permutation::from_images(std::move(sim)),
                             Permutation::from_images(std::move(aim)));
}

CleanDessin triangulate(const CleanDessin& d) {
    const int darts = d.dart_count();
    // Output darts per input dart i (1-based), all six families:
    //   sb(i): segment edge at the original black vertex
    //   sm(i): segment edge at the edge midpoint
    //   cwc(i)/cwm(i): center spoke to the midpoint visit w(i) of face(i)
    //   cbc(i)/cbv(i): center spoke to the black corner between i and i^sigma
    const auto sb = [&](int i) { return i; };
    const auto sm = [&](int i) { return darts + i; };
    const auto cwc = [&](int i) { return 2 * darts + i; };
    const auto cwm = [&](int i) { return 3 * darts + i; };
    const auto cbc = [&](int i) { return 4 * darts + i; };
    const auto cbv = [&](int i) { return 5 * darts + i; };

    std::vector<int> sim(6 * darts, -1), aim(6 * darts, -1);
    const auto set_cycle = [&](const std::vector<int>& cyc) {
        const int k = static_cast<int>(cyc.size());
        for (int t = 0; t < k; ++t) sim[cyc[t] - 1] = cyc[(t + 1) % k] - 1;
    };

    for (const auto& cyc : cycles(d.sigma())) {
        std::vector<int> rot;
        for (int i : cyc) {
            rot.push_back(sb(i));
            rot.push_back(cbv(i));
        }
        set_cycle(rot);
    }
    for (const auto& [i, j] : d.edges())
        set_cycle({sm(i), cwm(j), sm(j), cwm(i)});
    for (const auto& face : cycles(d.phi())) {
        std::vector<int> rot;
        const int m = static_cast<int>(face.size());
        for (int t = 0; t < m; ++t) {
            rot.push_back(cwc(face[t]));
            rot.push_back(cbc(face[(t + 1) % m]));
        }
        set_cycle(rot);
    }
    for (int i = 1; i <= darts; ++i) {
        aim[sb(i) - 1] = sm(i) - 1;
        aim[sm(i) - 1] = sb(i) - 1;
        aim[cwc(i) - 1] = cwm(i) - 1;
        aim[cwm(i) - 1] = cwc(i) - 1;
        aim[cbc(i) - 1] = cbv(i) - 1;
        aim[cbv(i) - 1] = cbc(i) - 1;
    }
    return CleanDessin::make(Permutation::from_images(std::move(sim)),
                             Permutation::from_images(std::move(aim)));
}

CleanDessin random_dessin(int edge_count, std::uint64_t seed) {
    if (edge_count < 1)
        throw validation_error("random_dessin: edge count must be positive");
    std::mt19937_64 rng(seed);
    const Permutation alpha = standard_pairing(edge_count);
    for (;;) {
        Permutation sigma = random_permutation(2 * edge_count, rng);
        if (is_transitive({sigma, alpha}))
            return CleanDessin::make(std::move(sigma), alpha);
    }
}

} // namespace dessinlab
