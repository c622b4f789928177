#include "mpverify/prime_sums.hpp"

#include "mpverify/kahan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mpverify {

namespace {

void validate_query(const APQuery& q) {
    if (q.modulus == 1) {
        if (q.residue != 0) throw std::invalid_argument("APQuery: modulus 1 takes residue 0");
        return;
    }
    if (q.residue == 0 || q.residue >= q.modulus)
        throw std::invalid_argument("APQuery: need 0 < residue < modulus");
    if (std::gcd(q.modulus, q.residue) != 1)
        throw std::invalid_argument("APQuery: residue not coprime to modulus");
}

void check_cap(u64 x, const SumsOptions& opts, const char* what) {
    if (x > opts.cap)
        throw std::invalid_argument(std::string(what) + ": x " + std::to_string(x) +
                                    " exceeds cap " + std::to_string(opts.cap));
}

// Splits [lo, hi] into segment-aligned pieces (plus explicit cuts), sieves
// pieces on a worker pool, then merges the per-piece accumulators in
// ascending order.  Piece boundaries depend only on (lo, hi, segment_size,
// cuts), so results are bit-identical for any thread count.  on_cut sees the
// running total right after each requested cut point.
template <class Acc>
Acc parallel_reduce(u64 lo, u64 hi, const SumsOptions& opts, const std::vector<u64>& cuts,
                    const Acc& proto, const std::function<void(u64, const Acc&)>& on_cut) {
    const u64 seg = std::max(opts.segment_size, kMinSegmentSize);

    std::vector<u64> ends;
    for (u64 b = ((lo - 1) / seg + 1) * seg; b < hi; b += seg) ends.push_back(b);
    for (u64 c : cuts)
        if (c >= lo && c < hi) ends.push_back(c);
    ends.push_back(hi);
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

    const size_t npieces = ends.size();
    std::vector<Acc> partials(npieces, proto);
    const u32 root = static_cast<u32>(__builtin_sqrtl(static_cast<long double>(hi))) + 2;
    const std::vector<u32> base = base_primes(root);

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        WheelSegment wseg;
        for (;;) {
            const size_t k = next.fetch_add(1);
            if (k >= npieces) return;
            const u64 a0 = (k == 0) ? lo : ends[k - 1] + 1;
            const u64 b0 = ends[k];
            Acc& acc = partials[k];
            for (u64 p : {2ull, 3ull, 5ull})
                if (p >= a0 && p <= b0) acc.add(p);
            u64 a = a0;
            while (a <= b0) {
                const u64 b = std::min(b0, ((a - 1) / seg + 1) * seg);
                wseg.sieve(a, b, base);
                wseg.for_each([&acc](u64 p) { acc.add(p); });
                a = b + 1;
            }
        }
    };

    unsigned nthreads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = static_cast<unsigned>(std::min<size_t>(nthreads, npieces));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<bool> is_cut(npieces, false);
    if (on_cut) {
        for (u64 c : cuts) {
            const u64 cc = std::min(c, hi);
            auto it = std::lower_bound(ends.begin(), ends.end(), cc);
            if (it != ends.end() && *it == cc)
                is_cut[static_cast<size_t>(it - ends.begin())] = true;
        }
    }
    Acc total = proto;
    for (size_t k = 0; k < npieces; ++k) {
        total.merge(partials[k]);
        if (on_cut && is_cut[k]) on_cut(ends[k], total);
    }
    return total;
}

struct APAcc {
    u64 modulus = 1, residue = 0;
    Kahan theta, recip, logpp;
    u64 pi = 0;

    void add(u64 p) {
        if (modulus != 1 && p % modulus != residue) return;
        const long double lp = logl(static_cast<long double>(p));
        theta.add(lp);
        recip.add(1.0L / p);
        logpp.add(lp / p);
        ++pi;
    }
    void merge(const APAcc& o) {
        theta.merge(o.theta);
        recip.merge(o.recip);
        logpp.merge(o.logpp);
        pi += o.pi;
    }
};

struct MertensAcc {
    Kahan log_minus, log_plus;
    void add(u64 p) {
        log_minus.add(log1pl(-1.0L / p));
        log_plus.add(log1pl(1.0L / p));
    }
    void merge(const MertensAcc& o) {
        log_minus.merge(o.log_minus);
        log_plus.merge(o.log_plus);
    }
};

APAcc ap_proto(const APQuery& q) {
    APAcc a;
    a.modulus = q.modulus;
    a.residue = q.residue;
    return a;
}

APSums to_sums(const APAcc& a) {
    APSums s;
    s.theta = a.theta.value();
    s.recip = a.recip.value();
    s.logp_over_p = a.logpp.value();
    s.pi = a.pi;
    return s;
}

}  // namespace

APSums ap_sums(u64 x, const APQuery& q, const SumsOptions& opts) {
    validate_query(q);
    check_cap(x, opts, "ap_sums");
    if (x < 2) return {};
    return to_sums(parallel_reduce<APAcc>(1, x, opts, {}, ap_proto(q), nullptr));
}

long double theta(u64 x, const APQuery& q, const SumsOptions& opts) {
    validate_query(q);
    check_cap(x, opts, "theta");
    if (x < 2) return 0;
    if (opts.checkpoint_path.empty()) return ap_sums(x, q, opts).theta;

    // resumable run: CSV rows "x,theta,pi" every checkpoint_stride integers
    u64 resume_x = 0, resume_pi = 0;
    long double resume_theta = 0;
    {
        std::ifstream in(opts.checkpoint_path);
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.rfind("x,", 0) == 0) continue;
            unsigned long long cx = 0, cpi = 0;
            long double cth = 0;
            if (std::sscanf(line.c_str(), "%llu,%Lf,%llu", &cx, &cth, &cpi) == 3 && cx <= x &&
                cx > resume_x) {
                resume_x = cx;
                resume_theta = cth;
                resume_pi = cpi;
            }
        }
    }
    if (resume_x >= x) return resume_theta;

    const bool fresh_file = resume_x == 0;
    std::ofstream outf(opts.checkpoint_path, fresh_file ? std::ios::trunc : std::ios::app);
    if (!outf) throw std::runtime_error("cannot open checkpoint file " + opts.checkpoint_path);
    if (fresh_file) outf << "x,theta,pi\n";

    std::vector<u64> cuts;
    const u64 stride = std::max<u64>(opts.checkpoint_stride, 1);
    for (u64 c = (resume_x / stride + 1) * stride; c < x; c += stride) cuts.push_back(c);
    cuts.push_back(x);

    std::function<void(u64, const APAcc&)> on_cut = [&](u64 cx, const APAcc& acc) {
        outf << cx << "," << decimal_string(resume_theta + acc.theta.value()) << ","
             << (resume_pi + acc.pi) << "\n";
        outf.flush();
    };
    APAcc total = parallel_reduce<APAcc>(resume_x + 1, x, opts, cuts, ap_proto(q), on_cut);
    return resume_theta + total.theta.value();
}

long double sum_recip(u64 z, const APQuery& q, const SumsOptions& opts) {
    return ap_sums(z, q, opts).recip;
}

long double sum_logp_over_p(u64 z, const APQuery& q, const SumsOptions& opts) {
    return ap_sums(z, q, opts).logp_over_p;
}

std::pair<long double, long double> mertens_products(u64 z, const SumsOptions& opts) {
    check_cap(z, opts, "mertens_products");
    if (z < 3) throw std::invalid_argument("mertens_products: need z >= 3");
    MertensAcc total = parallel_reduce<MertensAcc>(1, z, opts, {}, MertensAcc{}, nullptr);
    return {expl(total.log_minus.value()), expl(total.log_plus.value())};
}

long double phi1(long double z, const SumsOptions& opts) {
    if (!(z > 60)) throw std::domain_error("phi1: need z > 60");
    const u64 zi = static_cast<u64>(z);
    check_cap(zi, opts, "phi1");
    const long double tail = 1.0L / (z * logl(z));
    Kahan sum;
    for_each_prime(
        31, zi,
        [&](u64 p) {
            if (p % 15 != 1) return;
            const long double a = std::max<long double>(static_cast<long double>(p), 60.0L);
            sum.add(logl(static_cast<long double>(p)) * (1.0L / (a * logl(a)) - tail));
        },
        opts.segment_size);
    return sum.value();
}

long double phi2(long double z, const SumsOptions& opts) {
    if (!(z > 31)) throw std::domain_error("phi2: need z > 31");
    const u64 zi = static_cast<u64>(z);
    check_cap(zi, opts, "phi2");
    const long double tail = 1.0L / z;
    Kahan sum;
    for_each_prime(
        31, zi,
        [&](u64 p) {
            if (p % 15 != 1) return;
            const long double a = std::max<long double>(static_cast<long double>(p), 31.0L);
            sum.add(logl(static_cast<long double>(p)) * (1.0L / a - tail));
        },
        opts.segment_size);
    return sum.value();
}

std::vector<ThetaCheckpoint> theta_profile(std::vector<u64> xs, const APQuery& q,
                                           const SumsOptions& opts) {
    validate_query(q);
    if (xs.empty()) return {};
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const u64 x = xs.back();
    check_cap(x, opts, "theta_profile");

    std::vector<ThetaCheckpoint> rows;
    std::function<void(u64, const APAcc&)> on_cut = [&rows](u64 cx, const APAcc& acc) {
        rows.push_back({cx, acc.theta.value(), acc.pi});
    };
    parallel_reduce<APAcc>(1, x, opts, xs, ap_proto(q), on_cut);
    return rows;
}

}  // namespace mpverify
