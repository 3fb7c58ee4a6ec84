"""Regenerate tests/oracles/complexfn_values.inc from mpmath at 40 digits."""
import mpmath as mp

mp.mp.dps = 40


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-3, max_fixed=3), mp.nstr(z.imag, 20, min_fixed=-3, max_fixed=3))


def cx(re, im=0):
    return mp.mpc(re, im)


hyp = [
    (cx(0.7, 0.2), cx(0.5), cx(0)),
    (cx(1.3), cx(1.3), cx(2, 1)),
    (cx(-0.5, 0.3), cx(1.5), cx(3, -2)),
    (cx(0.25), cx(0.5), cx(1.0)),
    (cx(0.3, -0.4), cx(0.5), cx(-12.5, 3)),
    (cx(2.5, 1.0), cx(1.5), cx(-30, -8)),
    (cx(-3.7, 0.2), cx(0.5), cx(15, 10)),
    (cx(1.1), cx(2.5), cx(40, -25)),
    (cx(0.5, 2.0), cx(1.5), cx(-4.9, 19)),
    (cx(-2.25, -1.5), cx(0.5), cx(6, -7)),
    (cx(4.0, 0.5), cx(3.5, 0.5), cx(-45, 10)),
    (cx(0.1, 0.1), cx(0.5), cx(0, 35)),
]

pcf = [
    (cx(0), cx(1.3)),
    (cx(1), cx(0)),
    (cx(-0.5), cx(1.2)),
    (cx(2.5, 0.5), cx(-0.7, 1.1)),
    (cx(-1.75), cx(2.0, -0.5)),
    (cx(3), cx(1.5)),
]

rg = [cx(0.5), cx(-2.5, 0.3), cx(3.2, -1.1), cx(1e-3, 2.0), cx(-7.25)]

airy = [cx(0), cx(1.5), cx(-2.0), cx(0.8, 1.3), cx(-1.2, -2.4)]

out = []
out.append("// generated by gen_complexfn.py; do not edit")
out.append("struct HypCase { aes::cplx d, c, x, value; };")
out.append("inline const HypCase kHypCases[] = {")
for d, cc, x in hyp:
    out.append("    {%s, %s, %s, %s}," % (c(d), c(cc), c(x), c(mp.hyp1f1(d, cc, x))))
out.append("};")
out.append("struct PcfCase { aes::cplx nu, x, value; };")
out.append("inline const PcfCase kPcfCases[] = {")
for nu, x in pcf:
    out.append("    {%s, %s, %s}," % (c(nu), c(x), c(mp.pcfd(nu, x))))
out.append("};")
out.append("struct RgCase { aes::cplx z, value; };")
out.append("inline const RgCase kRgammaCases[] = {")
for z in rg:
    out.append("    {%s, %s}," % (c(z), c(mp.rgamma(z))))
out.append("};")
out.append("struct AiryCase { aes::cplx x, ai, bi; };")
out.append("inline const AiryCase kAiryCases[] = {")
for x in airy:
    out.append("    {%s, %s, %s}," % (c(x), c(mp.airyai(x)), c(mp.airybi(x))))
out.append("};")
x = mp.mpf(2)
z = mp.mpf(2) / 3 * x ** mp.mpf(1.5)
out.append("inline const aes::cplx kKernelOddC1X2 = %s;" % c(mp.sqrt(x) * mp.besselj(mp.mpf(1) / 3, z)))
out.append("inline const aes::cplx kKernelEvenC1X2 = %s;" % c(mp.sqrt(x) * mp.besselj(-mp.mpf(1) / 3, z)))
cc = mp.mpf(0.8)
x = mp.mpf(1.7)
z = mp.mpf(2) / 3 * cc * x ** mp.mpf(1.5)
out.append("inline const aes::cplx kKernelOddC08X17 = %s;" % c(mp.sqrt(x) * mp.besselj(mp.mpf(1) / 3, z)))
out.append("inline const aes::cplx kKernelEvenC08X17 = %s;" % c(mp.sqrt(x) * mp.besselj(-mp.mpf(1) / 3, z)))
print("\n".join(out))
