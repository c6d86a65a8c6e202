#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "nmcontrol/control_optimizer.hpp"
#include "nmcontrol/dephasing_maps.hpp"
#include "nmcontrol/errors.hpp"
#include "oracles.hpp"

using namespace nmc;
using std::numbers::pi;

namespace {

BlochVector random_sphere(nmc::testing::Gen& gen) {
    const auto p = gen.sphere();
    return {p[0], p[1], p[2]};
}

ControlProtocol random_protocol(nmc::testing::Gen& gen, double t_max, bool y_only = false) {
    std::vector<Pulse> pulses;
    const int n = gen.integer(0, 3);
    double t = 0.0;
    for (int i = 0; i < n; ++i) {
        t += gen.uniform(0.05, t_max / 3.0);
        const Axis axis = y_only ? Axis::y : static_cast<Axis>(gen.integer(0, 2));
        pulses.push_back({t, axis, gen.uniform(-pi, pi)});
    }
    return ControlProtocol(pulses);
}

struct OvershootSetup {
    SpectralParams params{4.0};
    BlochVector initial = BlochVector::from_angles(0.2 * pi);
    ControlProtocol protocol;

    OvershootSetup() {
        const auto at_pulse = propagate_uncontrolled(initial, 1.0, params);
        protocol = ControlProtocol::single(1.0, Axis::y, equator_pulse_angle(at_pulse));
    }
};

}  // namespace

TEST_CASE("protocol validation") {
    CHECK_THROWS_AS(ControlProtocol({{0.0, Axis::y, 1.0}}), ConfigError);
    CHECK_THROWS_AS(ControlProtocol({{2.0, Axis::y, 1.0}, {1.0, Axis::y, 1.0}}), ConfigError);
    CHECK_THROWS_AS(ControlProtocol({{1.0, Axis::y, 1.0}, {1.0, Axis::z, 1.0}}), ConfigError);
    CHECK_THROWS_AS(ControlProtocol({{1.0, Axis::y, std::nan("")}}), ConfigError);
    const ControlProtocol p({{1.0, Axis::y, 0.5}, {2.0, Axis::z, 0.1}});
    CHECK(p.prefix(0).empty());
    CHECK(p.prefix(1).pulses().size() == 1);
    CHECK(p.prefix(5).pulses().size() == 2);
    CHECK(parse_mode("fixed") == PropagationMode::fixed_dissipator);
    CHECK(parse_mode("both") == std::nullopt);
}

TEST_CASE("uncontrolled propagation") {
    const SpectralParams p(3.0);
    CHECK(propagate_uncontrolled({1, 0, 0}, 0.0, p) == BlochVector{1, 0, 0});
    const auto r = propagate_uncontrolled({0, 0, 1}, 5.0, p);
    CHECK(r == BlochVector{0, 0, 1});
    const auto far = propagate_uncontrolled({1, 0, 0}, 1e6, p);
    CHECK(far.rx == doctest::Approx(std::exp(-1.0)).epsilon(1e-5));
}

TEST_CASE("fixed-dissipator examples") {
    const SpectralParams p(3.0);
    const ControlProtocol none;
    CHECK(max_abs_diff(propagate_fixed_dissipator({0.6, 0.0, 0.8}, none, 2.0, p).vec(),
                       propagate_uncontrolled({0.6, 0.0, 0.8}, 2.0, p).vec()) < 1e-15);

    // A pulse after t has no effect yet.
    const auto later = ControlProtocol::single(5.0, Axis::y, 1.0);
    CHECK(propagate_fixed_dissipator({1, 0, 0}, later, 2.0, p) == propagate_uncontrolled({1, 0, 0}, 2.0, p));

    // A pulse at t = t_p is applied.
    const auto at = ControlProtocol::single(2.0, Axis::y, pi / 2);
    const auto r = propagate_fixed_dissipator({0, 0, 1}, at, 2.0, p);
    CHECK(max_abs_diff(r.vec(), {1, 0, 0}) < 1e-15);

    // Overshoot: equatorial state after a pulse with decreasing Gamma grows.
    const SpectralParams p4(4.0);
    const auto grow = propagate_fixed_dissipator({0, 0, 0.5}, ControlProtocol::single(1.0, Axis::y, pi / 2), 30.0, p4);
    CHECK(grow.rx == doctest::Approx(0.5 * std::exp(decoherence_fn(1.0, p4) - decoherence_fn(30.0, p4))).epsilon(1e-14));
    CHECK(grow.rx > 0.5);
    CHECK_THROWS_AS(propagate_fixed_dissipator({}, none, -1.0, p), DomainError);
}

TEST_CASE("microscopic examples") {
    const SpectralParams p(3.0);
    // Before the pulse it is the uncontrolled map.
    const auto prot = ControlProtocol::single(1.0, Axis::y, 0.7);
    const BlochVector r0{0.3, 0.2, 0.5};
    CHECK(propagate_microscopic(r0, prot, 0.5, p) == propagate_uncontrolled(r0, 0.5, p));

    // Zero-angle pulse reduces to free dephasing.
    const auto trivial = ControlProtocol::single(1.0, Axis::y, 0.0);
    for (double t : {1.0, 2.0, 7.5})
        CHECK(max_abs_diff(propagate_microscopic(r0, trivial, t, p).vec(), propagate_uncontrolled(r0, t, p).vec()) <
              1e-14);

    // Populations are frozen after the pulse.
    const auto a = propagate_microscopic(r0, prot, 2.0, p);
    const auto b = propagate_microscopic(r0, prot, 9.0, p);
    CHECK(a.rz == b.rz);
    CHECK(a.rz == doctest::Approx(r0.rz * std::cos(0.7) - r0.rx * std::sin(0.7) * std::exp(-decoherence_fn(1.0, p))));

    // Right after the pulse the microscopic and fixed pictures agree.
    const auto right_after = propagate_microscopic(r0, prot, 1.0, p);
    const auto fixed = propagate_fixed_dissipator(r0, prot, 1.0, p);
    CHECK(max_abs_diff(right_after.vec(), fixed.vec()) < 1e-13);

    CHECK_THROWS_AS(propagate_microscopic(r0, ControlProtocol::single(1.0, Axis::x, 0.3), 2.0, p),
                    UnsupportedProtocolError);
    CHECK_THROWS_AS(
        propagate_microscopic(r0, ControlProtocol({{1.0, Axis::y, 0.3}, {2.0, Axis::y, 0.3}}), 3.0, p),
        UnsupportedProtocolError);
}

TEST_CASE("fixed propagation matches map composition") {
    nmc::testing::Gen gen(101);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SpectralParams p(gen.uniform(1.5, 6.0));
        const auto r0 = random_sphere(gen);
        const auto prot = random_protocol(gen, 10.0);
        const double t = gen.uniform(0.0, 12.0);
        const auto direct = propagate_fixed_dissipator(r0, prot, t, p);
        const auto via_map = map_at(t, p, prot, PropagationMode::fixed_dissipator).apply(r0);
        worst = std::max(worst, max_abs_diff(direct.vec(), via_map.vec()));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("microscopic map is affine and matches propagation") {
    nmc::testing::Gen gen(7);
    for (int i = 0; i < 200; ++i) {
        const SpectralParams p(gen.uniform(2.0, 6.0));
        const auto r0 = random_sphere(gen);
        const auto prot = ControlProtocol::single(gen.uniform(0.1, 4.0), Axis::y, gen.uniform(0.0, pi));
        const double t = gen.uniform(0.0, 15.0);
        const auto m = map_at(t, p, prot, PropagationMode::microscopic);
        CHECK(max_abs_diff(m.apply(r0).vec(), propagate_microscopic(r0, prot, t, p).vec()) < 1e-12);
    }
}

TEST_CASE("continuity and pulse jumps") {
    nmc::testing::Gen gen(19);
    const double eps = 1e-7;
    for (int i = 0; i < 100; ++i) {
        const SpectralParams p(gen.uniform(2.0, 6.0));
        const auto r0 = random_sphere(gen);
        const double tp = gen.uniform(0.5, 5.0);
        const double angle = gen.uniform(0.0, pi);
        const auto prot = ControlProtocol::single(tp, Axis::y, angle);
        for (auto mode : {PropagationMode::fixed_dissipator, PropagationMode::microscopic}) {
            const double t = tp + gen.uniform(0.5, 5.0);
            CHECK(max_abs_diff(propagate(mode, r0, prot, t, p).vec(), propagate(mode, r0, prot, t + eps, p).vec()) <
                  1e-5);
            const auto left = propagate(mode, r0, prot, tp - eps, p);
            const auto right = propagate(mode, r0, prot, tp + eps, p);
            CHECK(max_abs_diff(rotate(left, Axis::y, angle).vec(), right.vec()) < 1e-5);
        }
    }
}

TEST_CASE("microscopic dynamics stays physical") {
    nmc::testing::Gen gen(23);
    double worst = 0.0;
    for (double s : {2.5, 3.0, 4.0, 5.0}) {
        const SpectralParams p(s);
        for (int i = 0; i < 100; ++i) {
            const auto r0 = random_sphere(gen);
            const auto prot = ControlProtocol::single(gen.uniform(0.05, 10.0), Axis::y, gen.uniform(0.0, pi));
            for (int k = 0; k <= 60; ++k)
                worst = std::max(worst, propagate_microscopic(r0, prot, 0.5 * k, p).norm());
        }
    }
    CHECK(worst <= 1.0 + 1e-9);
}

TEST_CASE("z pulses are covariant") {
    nmc::testing::Gen gen(29);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const SpectralParams p(gen.uniform(1.5, 6.0));
        const auto r0 = random_sphere(gen);
        std::vector<Pulse> pulses;
        double t = 0.0;
        double total = 0.0;
        for (int k = 0; k < 3; ++k) {
            t += gen.uniform(0.1, 3.0);
            const double a = gen.uniform(-pi, pi);
            pulses.push_back({t, Axis::z, a});
            total += a;
        }
        const ControlProtocol prot(pulses);
        const double t_end = t + gen.uniform(0.0, 5.0);
        const double c_fixed = coherence(propagate_fixed_dissipator(r0, prot, t_end, p));
        const double c_micro = coherence(propagate_microscopic(r0, prot, t_end, p));
        const double c_free = coherence(propagate_uncontrolled(rotate(r0, Axis::z, total), t_end, p));
        worst = std::max({worst, std::fabs(c_fixed - c_free), std::fabs(c_micro - c_free)});
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("is_covariant") {
    const SpectralParams p(3.0);
    CHECK(is_covariant(Axis::z, 0.37, p));
    CHECK(is_covariant(Axis::z, pi, p));
    CHECK_FALSE(is_covariant(Axis::y, 0.5, p));
    CHECK_FALSE(is_covariant(Axis::x, 0.5, p));
    CHECK(is_covariant(Axis::x, 0.0, p));
}

TEST_CASE("Choi matrix examples") {
    const auto id = hermitian_eigenvalues(choi_matrix(QubitMap{}));
    CHECK(id[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(id[1] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(id[2] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(id[3] == doctest::Approx(1.0).epsilon(1e-14));

    const auto half = hermitian_eigenvalues(choi_matrix(QubitMap::dephasing(0.5)));
    CHECK(std::fabs(half[0]) < 1e-14);
    CHECK(std::fabs(half[1]) < 1e-14);
    CHECK(half[2] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(half[3] == doctest::Approx(0.75).epsilon(1e-14));

    CHECK(choi_matrix(QubitMap::dephasing(0.3)).trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(is_cp(QubitMap::dephasing(1.0)).cp);
    const auto expand = is_cp(QubitMap::dephasing(1.2));
    CHECK_FALSE(expand.cp);
    CHECK(expand.min_eigenvalue == doctest::Approx(-0.1).epsilon(1e-12));

    // The transpose map is positive but not CP.
    const QubitMap transpose{Mat3::diag(1, -1, 1), {}};
    CHECK_FALSE(is_cp(transpose).cp);

    // Amplitude damping to the ground state is CP and affine.
    const double lam = 0.4;
    const QubitMap damp{Mat3::diag(std::sqrt(lam), std::sqrt(lam), lam), {0, 0, lam - 1.0}};
    CHECK(is_cp(damp).cp);
}

TEST_CASE("intermediate maps") {
    const SpectralParams p(3.0);
    CHECK(intermediate_map_cp(0.0, 1.0, p));
    CHECK(intermediate_map_cp(0.5, 1.5, p));
    CHECK_FALSE(intermediate_map_cp(2.0, 3.0, p));  // Gamma decreases across [2, 3]
    CHECK(intermediate_map_cp(2.0, 2.0, p));
    CHECK_THROWS_AS(intermediate_map(2.0, 1.0, p), DomainError);
    const SpectralParams markov(1.5);
    for (double s_time : {0.0, 1.0, 4.0})
        CHECK(intermediate_map_cp(s_time, s_time + 3.0, markov));
}

TEST_CASE("accessible set") {
    const SpectralParams p(3.0);
    for (double rz : {-1.0, 0.0, 0.6, 1.0}) {
        const auto chk = in_accessible_set({0, 0, rz}, 4.0, p);
        CHECK(chk.inside);
        CHECK_FALSE(chk.degenerate);
    }
    // Gamma(t) = 1 only asymptotically for s = 3; t = 1e6 is close enough.
    CHECK_FALSE(in_accessible_set({1, 0, 0}, 1e6, p).inside);
    nmc::testing::Gen gen(31);
    for (int i = 0; i < 200; ++i) {
        const double t = gen.uniform(0.0, 20.0);
        CHECK(in_accessible_set(propagate_uncontrolled(random_sphere(gen), t, p), t, p).inside);
    }
    const SpectralParams p8(8.0);
    REQUIRE(std::exp(-decoherence_fn(1e3, p8)) < std::numeric_limits<double>::min());
    const auto deg = in_accessible_set({0, 0, 0.5}, 1e3, p8);
    CHECK(deg.inside);
    CHECK(deg.degenerate);
    CHECK_FALSE(in_accessible_set({1e-3, 0, 0.5}, 1e3, p8).inside);
    CHECK_THROWS_AS(in_accessible_set({}, -1.0, p), DomainError);
}

TEST_CASE("CP audit: uncontrolled") {
    for (double s : {1.5, 3.0, 5.0}) {
        const auto report = cp_audit({}, SpectralParams(s), 30.0, 300);
        CHECK_FALSE(report.cp_violating);
        CHECK(report.max_bloch_norm <= 1.0 + 1e-12);
        CHECK(report.rows.size() == 301);
        CHECK(report.min_choi_eigenvalue >= -1e-12);
    }
    CHECK_THROWS_AS(cp_audit({}, SpectralParams(3.0), 0.0, 10), ConfigError);
    CHECK_THROWS_AS(cp_audit({}, SpectralParams(3.0), 1.0, 0), ConfigError);
}

TEST_CASE("CP audit: overshoot protocol") {
    const OvershootSetup fig;
    const auto traj =
        sample_trajectory(PropagationMode::fixed_dissipator, fig.initial, fig.protocol, 30.0, 3000, fig.params);
    double traj_max = 0.0;
    for (const auto& smp : traj.samples()) traj_max = std::max(traj_max, smp.state.norm());
    CHECK(std::fabs(traj_max - 1.336) <= 0.01);

    // The audit maximizes over all initial states, so it can only be larger.
    const auto fixed = cp_audit(fig.protocol, fig.params, 30.0, 300);
    CHECK(fixed.cp_violating);
    CHECK(fixed.max_bloch_norm >= traj_max);
    CHECK(fixed.min_choi_eigenvalue < -1e-3);

    const double expected = propagate_uncontrolled(fig.initial, 1.0, fig.params).norm() *
                            std::exp(decoherence_fn(1.0, fig.params) - decoherence_fn(30.0, fig.params));
    const auto end = propagate_fixed_dissipator(fig.initial, fig.protocol, 30.0, fig.params);
    CHECK(end.norm() == doctest::Approx(expected).epsilon(1e-12));

    const auto micro = cp_audit(fig.protocol, fig.params, 30.0, 300, 256, PropagationMode::microscopic);
    CHECK_FALSE(micro.cp_violating);
    CHECK(micro.max_bloch_norm <= 1.0 + 1e-9);
}

TEST_CASE("CP violation shows up as a state leaving the ball") {
    nmc::testing::Gen gen(37);
    int violating = 0;
    for (int i = 0; i < 150; ++i) {
        const SpectralParams p(gen.uniform(2.5, 6.0));
        const auto prot = ControlProtocol::single(gen.uniform(0.1, 10.0), Axis::y, gen.uniform(-pi, pi));
        const auto report = cp_audit(prot, p, 30.0, 60);
        for (const auto& row : report.rows) {
            if (row.min_choi_eigenvalue < -CpAuditReport::kTolerance) {
                ++violating;
                CHECK(row.max_bloch_norm > 1.0 + CpAuditReport::kTolerance);
            }
            if (row.max_bloch_norm > 1.0 + 1e-6) CHECK(row.min_choi_eigenvalue < -CpAuditReport::kTolerance);
        }
    }
    CHECK(violating > 0);
}
