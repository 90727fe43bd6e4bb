"""Regenerates tests/reference_values.hpp from mpmath at 40 digits.

    python tests/oracles/make_reference.py > tests/reference_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40


def c(v):
    v = mp.mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 17, min_fixed=-30, max_fixed=30),
                         mp.nstr(v.imag, 17, min_fixed=-30, max_fixed=30))


def r(v):
    return mp.nstr(mp.mpf(v), 17, min_fixed=-30, max_fixed=30)


def big_g(z):
    return mp.pi * mp.rgamma(mp.mpf(0.5) - z)


def table(name, pts, fn):
    rows = ",\n".join("    {%s, %s}" % (c(p), c(fn(p))) for p in pts)
    return "inline constexpr Sample %s[] = {\n%s,\n};\n" % (name, rows)


GAMMA_GRID = [mp.mpf(k) + mp.mpf(0.5) for k in range(-4, 5)] + [
    mp.mpc(0.5, 3), mp.mpc(0.5, -3), mp.mpc(2, 2), mp.mpc(2, -2), mp.mpc(-1.5, 1)]
ZETA_GRID = [mp.mpc(*p) for p in [
    (-1.5, 0), (-1.5, 2), (-0.5, 0), (-0.5, 5), (0.25, 0), (0.5, 0), (0.5, 3), (0.5, 10),
    (0.75, -4), (1.5, 0), (1.5, 1), (1.3, -7), (2.5, 0), (2.5, 10), (3.5, 0), (3.7, -2),
    (-1.8, 8), (0.1, 0.1), (2.2, -0.5), (4, 6)]]
DIGAMMA_GRID = [mp.mpc(0.5), mp.mpc(1), mp.mpc(2), mp.mpc(1, 1), mp.mpc(-0.5, 0.3), mp.mpc(3.2, -1.5)]
G_GRID = [mp.mpc(a, b) for a in (-2, -1, 0, 1, 2) for b in (-2, 0, 1.5)]
CRIT_TAUS = [1, 5, 10, 14, 20, 25, 30]


def normal_abs(rr):
    return 2 ** (rr / 2) * mp.gamma((rr + 1) / 2) / mp.sqrt(mp.pi)


out = ["// Generated by tests/oracles/make_reference.py (mpmath, 40 digits). Do not edit.",
       "#pragma once", "", "#include <complex>", "", "namespace ref {", "",
       "struct Sample {", "  std::complex<double> arg;", "  std::complex<double> value;", "};", ""]
out.append(table("kRecipGamma", GAMMA_GRID, mp.rgamma))
out.append(table("kGamma", GAMMA_GRID, mp.gamma))
out.append(table("kZeta", ZETA_GRID, mp.zeta))
out.append(table("kDigamma", DIGAMMA_GRID, mp.digamma))
out.append(table("kBigG", G_GRID, big_g))
out.append(table("kCriticalLine", [mp.mpc(0.5, t) for t in CRIT_TAUS], mp.zeta))
out.append(table("kEta", [mp.mpc(1.5), mp.mpc(0.5), mp.mpc(0.7, 2), mp.mpc(2.5, -1)],
                 lambda s: mp.altzeta(s)))
out.append(table("kHurwitzHalf", [mp.mpc(1.3), mp.mpc(2.5), mp.mpc(3.7), mp.mpc(1.5, 2)],
                 lambda s: mp.zeta(s, 0.5)))
out.append(table("kNormalAbsMoment",
                 [mp.mpc(0.5), mp.mpc(1), mp.mpc(1.5), mp.mpc(2), mp.mpc(2.5), mp.mpc(1, 1)],
                 normal_abs))
out.append(table("kLaplaceHalfAbsMoment", [mp.mpc(1), mp.mpc(1.5), mp.mpc(0.5), mp.mpc(2.5)],
                 lambda rr: mp.mpf(0.5) ** rr * mp.gamma(rr + 1)))

zeros = [mp.im(mp.zetazero(k)) for k in range(1, 6)]
out.append("inline constexpr double kZetaZeros[] = {%s};" % ", ".join(r(z) for z in zeros))
out.append("inline constexpr double kEulerGamma = %s;" % r(mp.euler))
out.append("inline constexpr double kZetaHalf = %s;" % r(mp.zeta(0.5)))
out.append("inline constexpr double kRationalAtZero = %s;" % r(mp.pi))
out.append("inline constexpr double kPerturbedExpAtZero = %s;"
           % r(mp.sqrt(2 * mp.pi) * mp.exp(mp.mpf(-1) / 4) * mp.pcfd(0, 1)))
out.append("inline constexpr double kIncompleteGammaAtZero = %s;" % r(2 * mp.gamma(2.5)))
out.append("inline constexpr double kDirichletBetaG1 = %s;"
           % r(big_g(1) * (mp.zeta(1.5, 0.25) - mp.zeta(1.5, 0.75)) / mp.mpf(4) ** 1.5))
out.append("inline constexpr double kSqrtPiZeta15 = %s;" % r(mp.sqrt(mp.pi) * mp.zeta(1.5)))
out.append("inline constexpr double kMinusSqrtPiEta15 = %s;"
           % r(-mp.sqrt(mp.pi) * mp.altzeta(1.5)))
out.append("inline constexpr std::complex<double> kComplexShiftZ1K2 = %s;"
           % c(big_g(1) * mp.nsum(lambda n: n ** -2 * (n + 1j) ** -1.5, [1, mp.inf])))
# R(z, N+1) = G(z) ζ(z + 1/2, N + 1) at s = 2.5, z = 2
out.append("inline constexpr double kTruncatedResidual[] = {%s};" % ", ".join(
    r(big_g(2) * mp.zeta(2.5, n + 1)) for n in (1, 2, 4, 8, 16)))
out.append("inline constexpr double kTruncatedCounts[] = {1, 2, 4, 8, 16};")
out += ["", "}  // namespace ref", ""]
print("\n".join(out))
