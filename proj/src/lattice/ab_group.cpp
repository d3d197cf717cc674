#include "cmtorus/lattice/ab_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cmtorus/error.hpp"

namespace cmtorus::lattice {

AbGroupStructure AbGroupStructure::from_cyclic_orders(const std::vector<Integer>& orders,
                                                      std::size_t extra_free_rank)
{
    AbGroupStructure g;
    g.free_rank_ = extra_free_rank;
    std::vector<Integer> d;
    for (const auto& o : orders) {
        Integer a = abs(o);
        if (a == 0)
            ++g.free_rank_;
        else if (a != 1)
            d.push_back(a);
    }
    // Pairwise (gcd, lcm) replacement yields a divisibility chain.
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Integer gg = gcd(d[i], d[j]);
            Integer ll = lcm(d[i], d[j]);
            d[i] = gg;
            d[j] = ll;
        }
    for (auto& x : d)
        if (x != 1)
            g.torsion_.push_back(x);
    return g;
}

std::optional<Integer> AbGroupStructure::order() const
{
    if (free_rank_ != 0)
        return std::nullopt;
    Integer n = 1;
    for (const auto& d : torsion_)
        n *= d;
    return n;
}

Integer AbGroupStructure::exponent() const
{
    return torsion_.empty() ? Integer(1) : torsion_.back();
}

AbGroupStructure AbGroupStructure::direct_sum(const AbGroupStructure& other) const
{
    std::vector<Integer> d = torsion_;
    d.insert(d.end(), other.torsion_.begin(), other.torsion_.end());
    return from_cyclic_orders(d, free_rank_ + other.free_rank_);
}

std::string AbGroupStructure::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1)
            os << '^' << free_rank_;
        first = false;
    }
    for (const auto& d : torsion_) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

namespace {

std::vector<Integer> prime_factors(Integer n)
{
    std::vector<Integer> ps;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

}  // namespace

AbGroupStructure structure_from_element_orders(const std::vector<Integer>& orders)
{
    const Integer total = static_cast<unsigned long>(orders.size());
    if (total == 0)
        throw ValidationError("structure_from_element_orders: empty group");
    std::vector<Integer> cyclic;
    Integer accounted = 1;
    for (const auto& p : prime_factors(total)) {
        // lambda[k] = log_p #{x : ord(x) | p^k}
        std::vector<unsigned long> lambda{0};
        Integer pk = 1;
        for (;;) {
            pk *= p;
            unsigned long count = 0;
            for (const auto& o : orders)
                if (pk % o == 0)
                    ++count;
            Integer c = count;
            unsigned long e = 0;
            while (c % p == 0) {
                c /= p;
                ++e;
            }
            if (c != 1)
                throw ValidationError("structure_from_element_orders: not an abelian group");
            if (e == lambda.back())
                break;
            lambda.push_back(e);
        }
        // Number of p-cyclic factors of exponent >= k is lambda[k] - lambda[k-1].
        const std::size_t K = lambda.size() - 1;
        for (std::size_t k = 1; k <= K; ++k) {
            const unsigned long at_least_k = lambda[k] - lambda[k - 1];
            const unsigned long at_least_k1 = (k < K) ? lambda[k + 1] - lambda[k] : 0;
            if (at_least_k < at_least_k1)
                throw ValidationError("structure_from_element_orders: not an abelian group");
            Integer pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), k);
            for (unsigned long c = 0; c < at_least_k - at_least_k1; ++c) {
                cyclic.push_back(pe);
                accounted *= pe;
            }
        }
    }
    if (accounted != total)
        throw ValidationError("structure_from_element_orders: order mismatch");
    return AbGroupStructure::from_cyclic_orders(cyclic);
}

}  // namespace cmtorus::lattice
