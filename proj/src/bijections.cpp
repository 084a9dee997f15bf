#include "partlab/bijections.hpp"

#include "partlab/errors.hpp"
#include "partlab/families.hpp"

#include <stdexcept>
#include <string>

namespace partlab {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw domain_error(what);
}

void require_modulus(int m, const char* name)
{
    require(m >= 2, std::string(name) + " must be >= 2");
}

std::string num(long v) { return std::to_string(v); }

trace_step step(std::string label, partition value, std::string note = {})
{
    return {std::move(label), std::move(value), std::move(note)};
}

family_id d_pk_family(int p, int k) { return {family_kind::d_k, {.k = p * k}}; }
family_id d_p0_family(int p, int k) { return {family_kind::d_pkr, {.p = p, .r = 0, .k = k}}; }

bijection_trace finish(bijection_trace tr, partition out)
{
    tr.output = out;
    tr.steps.push_back(step("output", std::move(out)));
    return tr;
}

} // namespace

partition glaisher(int t, const partition& p, validation v)
{
    require_modulus(t, "t");
    if (v == validation::strict) {
        for (const auto& b : p.blocks())
            require(b.mult <= part_t(t - 1), "glaisher: multiplicity of " + num(b.part) +
                                                 " exceeds t-1 in " + p.str());
    }
    partition_builder out;
    for (const auto& b : p.blocks()) {
        part_t base = b.part;
        std::uint64_t scale = 1;
        while (base % part_t(t) == 0) {
            base /= part_t(t);
            scale *= std::uint64_t(t);
        }
        out.add(base, scale * b.mult);
    }
    return out.build();
}

partition glaisher_inv(int t, const partition& p, validation v)
{
    require_modulus(t, "t");
    if (v == validation::strict) {
        for (const auto& b : p.blocks())
            require(b.part % part_t(t) != 0, "glaisher_inv: part " + num(b.part) +
                                                 " divisible by t in " + p.str());
    }
    partition_builder out;
    for (const auto& b : p.blocks()) {
        std::uint64_t m = b.mult;
        std::uint64_t scale = 1;
        while (m > 0) {
            out.add(part_t(scale * b.part), m % std::uint64_t(t));
            m /= std::uint64_t(t);
            scale *= std::uint64_t(t);
        }
    }
    return out.build();
}

bijection_trace genr_f_to_d(int p, int k, int r, const partition& lambda, validation v)
{
    require_modulus(p, "p");
    require_modulus(k, "k");
    require(r >= 0 && r < p, "r must satisfy 0 <= r < p");
    if (v == validation::strict) {
        require(belongs({family_kind::f_pkr, {.p = p, .r = r, .k = k}}, lambda),
                lambda.str() + " is not an f_p(n,k,r)-partition for p=" + num(p) + ", k=" + num(k) +
                    ", r=" + num(r));
    }
    bijection_trace tr{lambda, {}, {step("input", lambda)}};

    partition_builder divisible, rest;
    partition_builder scaled;
    for (const auto& b : lambda.blocks()) {
        if (b.part % part_t(k) == 0) {
            divisible.add(b.part, b.mult);
            scaled.add(b.part / part_t(k), std::uint64_t(k) * b.mult);
        } else {
            rest.add(b.part, b.mult);
        }
    }
    partition div_img = scaled.build();
    partition rest_part = rest.build();
    partition rest_img = glaisher_inv(k, rest_part, validation::unchecked);
    tr.steps.push_back(step("parts divisible by k", divisible.build()));
    tr.steps.push_back(step("x^m -> (x/k)^(km)", div_img));
    tr.steps.push_back(step("parts not divisible by k", rest_part));
    tr.steps.push_back(step("apply phi_k^-1", rest_img));
    return finish(std::move(tr), multiset_union(div_img, rest_img));
}

bijection_trace genr_d_to_f(int p, int k, int r, const partition& mu, validation v)
{
    require_modulus(p, "p");
    require_modulus(k, "k");
    require(r >= 0 && r < p, "r must satisfy 0 <= r < p");
    if (v == validation::strict) {
        require(belongs({family_kind::d_pkr, {.p = p, .r = r, .k = k}}, mu),
                mu.str() + " is not a d_p(n,k,r)-partition for p=" + num(p) + ", k=" + num(k) +
                    ", r=" + num(r));
    }
    bijection_trace tr{mu, {}, {step("input", mu)}};

    partition_builder blocks_k, remainder;
    for (const auto& b : mu.blocks()) {
        blocks_k.add(part_t(k) * b.part, b.mult / part_t(k));
        remainder.add(b.part, b.mult % part_t(k));
    }
    partition lifted = blocks_k.build();
    partition rem = remainder.build();
    partition rem_img = glaisher(k, rem, validation::unchecked);
    tr.steps.push_back(step("mu^s -> (k mu)^floor(s/k)", lifted));
    tr.steps.push_back(step("leftover mu^(s mod k)", rem));
    tr.steps.push_back(step("apply phi_k", rem_img));
    return finish(std::move(tr), multiset_union(lifted, rem_img));
}

bijection_trace dpk_to_dp(int p, int k, const partition& lambda, validation v)
{
    require_modulus(p, "p");
    require_modulus(k, "k");
    const part_t pk = part_t(p * k);
    if (v == validation::strict) {
        require(belongs(d_pk_family(p, k), lambda),
                lambda.str() + " is not a d_" + num(pk) + "-partition");
    }
    bijection_trace tr{lambda, {}, {step("input", lambda)}};

    // the unique block repeated at least pk times
    part_block heavy{0, 0};
    for (const auto& b : lambda.blocks())
        if (b.mult >= pk)
            heavy = b;
    if (heavy.mult == 0)
        throw domain_error(lambda.str() + " has no part repeated at least pk times");
    const part_t j = heavy.part;
    const part_t q = heavy.mult / pk;
    const part_t i = heavy.mult % pk;

    partition heavy_part = partition_builder().add(j, std::uint64_t(pk) * q).build();
    tr.steps.push_back(step("split j^m = j^(pkq) u j^i", heavy_part,
                            "j=" + num(j) + ", m=" + num(heavy.mult) + "=" + num(pk) + "*" + num(q) +
                                "+" + num(i)));
    partition converted = partition_builder().add(part_t(p) * j, std::uint64_t(k) * q).build();
    tr.steps.push_back(step("j^(pkq) -> (pj)^(kq)", converted));

    partition_builder rest;
    for (const auto& b : lambda.blocks())
        rest.add(b.part, b.part == j ? i : b.mult);
    partition remainder = rest.build();
    tr.steps.push_back(step("remainder", remainder));

    partition image = glaisher(int(pk), remainder, validation::unchecked);
    tr.steps.push_back(step("apply phi_pk", image));

    partition_builder prime, dprime, divided;
    for (const auto& b : image.blocks()) {
        if (b.part % part_t(p) != 0) {
            prime.add(b.part, b.mult);
        } else {
            dprime.add(b.part, b.mult);
            part_t x = b.part / part_t(p);
            // x not divisible by pk and divisible by p => x/p not divisible by k
            if (x % part_t(k) == 0)
                throw std::logic_error("dpk_to_dp: lemma violated for part " + num(b.part));
            divided.add(x, b.mult);
        }
    }
    partition lam_prime = prime.build();
    partition lam_dprime = dprime.build();
    partition div = divided.build();
    tr.steps.push_back(step("lambda' (parts not divisible by p)", lam_prime));
    tr.steps.push_back(step("lambda'' (parts divisible by p)", lam_dprime));
    tr.steps.push_back(step("divide lambda'' by p", div));
    partition inv = glaisher_inv(k, div, validation::unchecked);
    tr.steps.push_back(step("apply phi_k^-1", inv));
    partition_builder beta_b;
    for (const auto& b : inv.blocks())
        beta_b.add(part_t(p) * b.part, b.mult);
    partition beta = beta_b.build();
    tr.steps.push_back(step("beta = p * phi_k^-1(lambda''/p)", beta));

    return finish(std::move(tr), partition_builder(converted).add(beta).add(lam_prime).build());
}

bijection_trace dp_to_dpk(int p, int k, const partition& mu, validation v)
{
    require_modulus(p, "p");
    require_modulus(k, "k");
    const part_t pk = part_t(p * k);
    if (v == validation::strict) {
        require(belongs(d_p0_family(p, k), mu),
                mu.str() + " is not a d_p(n,k,0)-partition for p=" + num(p) + ", k=" + num(k));
    }
    bijection_trace tr{mu, {}, {step("input", mu)}};

    part_block heavy{0, 0};
    partition_builder beta_b, prime_b;
    for (const auto& b : mu.blocks()) {
        if (b.part % part_t(p) != 0)
            prime_b.add(b.part, b.mult);
        else if (b.mult >= part_t(k))
            heavy = b;
        else
            beta_b.add(b.part, b.mult);
    }
    if (heavy.mult == 0)
        throw domain_error(mu.str() + " has no part divisible by p repeated at least k times");
    const part_t s = heavy.part;
    const part_t t = heavy.mult / part_t(k);
    const part_t f = heavy.mult % part_t(k);
    partition beta = beta_b.build();
    partition lam_prime = prime_b.build();

    tr.steps.push_back(step("split s^m = s^(kt) u s^f", partition_builder().add(s, std::uint64_t(k) * t).build(),
                            "s=" + num(s) + ", m=" + num(heavy.mult) + "=" + num(k) + "*" + num(t) + "+" +
                                num(f)));
    partition converted = partition_builder().add(s / part_t(p), std::uint64_t(pk) * t).build();
    tr.steps.push_back(step("s^(kt) -> (s/p)^(pkt)", converted));
    tr.steps.push_back(step("beta", beta));
    tr.steps.push_back(step("lambda' (parts not divisible by p)", lam_prime));

    partition_builder small;
    for (const auto& b : beta.blocks())
        small.add(b.part / part_t(p), b.mult);
    small.add(s / part_t(p), f);
    partition divided = small.build();
    tr.steps.push_back(step("divide beta u s^f by p", divided));
    partition phi = glaisher(k, divided, validation::unchecked);
    tr.steps.push_back(step("apply phi_k", phi));
    partition_builder mu_prime_b;
    for (const auto& b : phi.blocks())
        mu_prime_b.add(part_t(p) * b.part, b.mult);
    partition mu_prime = mu_prime_b.build();
    tr.steps.push_back(step("mu' = p * phi_k((beta u s^f)/p)", mu_prime));

    partition joined = multiset_union(lam_prime, mu_prime);
    partition mu_dprime = glaisher_inv(int(pk), joined, validation::unchecked);
    tr.steps.push_back(step("mu'' = phi_pk^-1(lambda' u mu')", mu_dprime));

    return finish(std::move(tr), multiset_union(converted, mu_dprime));
}

bijection_trace var0_map(direction dir, int residue, const partition& p, validation v)
{
    require(residue == 0 || residue == 1, "var0_map residue must be 0 (f0 <-> d_e) or 1 (f2 <-> d_o)");
    return dir == direction::forward ? genr_f_to_d(2, 2, residue, p, v) : genr_d_to_f(2, 2, residue, p, v);
}

} // namespace partlab
