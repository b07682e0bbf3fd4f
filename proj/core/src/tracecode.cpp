#include "tracecodes/tracecode.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

namespace tracecodes::code {

CodeSpec CodeSpec::make(unsigned p, unsigned s, unsigned m, std::uint64_t e, std::uint64_t size_bound) {
    if (!gf::is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    if (s == 0) throw InvalidArgument("s must be at least 1");
    if (m == 0) throw InvalidArgument("m must be at least 1");
    CodeSpec c;
    c.p = p;
    c.s = s;
    c.m = m;
    c.e = e;
    c.q = 1;
    for (unsigned i = 0; i < s; ++i) {
        c.q *= p;
        if (c.q > size_bound) throw InvalidArgument("q = p^s exceeds the field size bound");
    }
    c.r = 1;
    for (unsigned i = 0; i < m; ++i) {
        c.r *= c.q;
        if (c.r > size_bound)
            throw InvalidArgument("r = q^m exceeds the field size bound " + std::to_string(size_bound));
    }
    if (e == 0 || (c.q - 1) % e != 0) throw InvalidArgument("e must divide q-1");
    c.N = std::gcd<std::uint64_t>(e, m);
    c.n = (c.r * c.r - c.r) / e;
    c.gray_length = 2 * c.n;
    c.dimension = 2 * m;
    return c;
}

std::string CodeSpec::label() const {
    return "p=" + std::to_string(p) + " s=" + std::to_string(s) + " m=" + std::to_string(m) + " e=" + std::to_string(e);
}

void WeightDistribution::add(std::uint64_t weight, std::uint64_t count) {
    if (count != 0) freq_[weight] += count;
}

void WeightDistribution::merge(const WeightDistribution& other) {
    for (const auto& [w, f] : other.freq_) add(w, f);
}

std::uint64_t WeightDistribution::frequency(std::uint64_t weight) const {
    auto it = freq_.find(weight);
    return it == freq_.end() ? 0 : it->second;
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (const auto& kv : freq_) t += kv.second;
    return t;
}

std::uint64_t WeightDistribution::min_distance() const {
    for (const auto& kv : freq_)
        if (kv.first != 0) return kv.first;
    return 0;
}

std::size_t WeightDistribution::num_nonzero_weights() const {
    return freq_.size() - (freq_.count(0) ? 1 : 0);
}

std::vector<std::uint64_t> WeightDistribution::coefficients() const {
    if (freq_.empty()) return {};
    std::vector<std::uint64_t> out(freq_.rbegin()->first + 1, 0);
    for (const auto& [w, f] : freq_) out[w] = f;
    return out;
}

std::string WeightDistribution::enumerator() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : freq_) {
        if (!first) os << "+";
        first = false;
        if (w == 0) {
            os << f;
            continue;
        }
        if (f != 1) os << f;
        os << "z^" << w;
    }
    return first ? "0" : os.str();
}

Codeword add(const gf::Field& F, const Codeword& x, const Codeword& y) {
    if (x.size() != y.size()) throw InvalidArgument("codewords of different lengths");
    Codeword out;
    out.a.resize(x.size());
    out.b.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.a[i] = F.add(x.a[i], y.a[i]);
        out.b[i] = F.add(x.b[i], y.b[i]);
    }
    return out;
}

std::vector<gf::Index> gray_map(const gf::Field& F, const Codeword& w) {
    const std::size_t n = w.size();
    std::vector<gf::Index> out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = w.b[i];
        out[n + i] = F.add(w.a[i], w.b[i]);
    }
    return out;
}

std::uint64_t lee_weight(const gf::Field& F, const Codeword& w) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) total += (w.b[i] != 0) + (F.add(w.a[i], w.b[i]) != 0);
    return total;
}

std::uint64_t hamming_weight(std::span<const gf::Index> v) {
    return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](gf::Index x) { return x != 0; }));
}

TraceCode::TraceCode(const CodeSpec& spec)
    : spec_(spec), ext_(gf::build_field(spec.p, spec.s * spec.m), spec.s) {
    const gf::Field& F = ext_.field();
    const std::uint64_t classes = (spec_.r - 1) / spec_.e;
    t_.reserve(classes);
    for (std::uint64_t i = 0; i < classes; ++i) t_.push_back(F.exp(static_cast<std::int64_t>(spec_.e * i)));
    elem_.reserve(spec_.r);
    elem_.push_back(0);
    for (std::uint64_t j = 1; j < spec_.r; ++j) elem_.push_back(F.exp(static_cast<std::int64_t>(j - 1)));
    trace_ = F.trace_table(spec_.s);
    // Every coordinate of every codeword is an entry of this table, so checking it once
    // establishes that ev(a) lies in (F_q + uF_q)^n.
    for (gf::Index v : trace_)
        if (!F.is_in_subfield(v, spec_.s)) throw ArithmeticError("trace value outside F_q");
}

ring::RingElement TraceCode::coordinate(std::uint64_t index) const {
    if (index >= spec_.n) throw InvalidArgument("coordinate index out of range");
    return ext_.make(t_[index / spec_.r], elem_[index % spec_.r]);
}

std::vector<ring::RingElement> TraceCode::defining_set() const {
    std::vector<ring::RingElement> out;
    out.reserve(spec_.n);
    for (gf::Index t : t_)
        for (gf::Index tp : elem_) out.push_back(ext_.make(t, tp));
    return out;
}

Codeword TraceCode::evaluate(const ring::RingElement& a) const {
    const gf::Field& F = field();
    if (a.a.field != &F || a.b.field != &F) throw FieldMismatch("ring element does not belong to this code's ring");
    Codeword w;
    w.a.reserve(spec_.n);
    w.b.reserve(spec_.n);
    for (gf::Index t : t_) {
        const gf::Index at = F.mul(a.a.value, t);
        const gf::Index bt = F.mul(a.b.value, t);
        for (gf::Index tp : elem_) {
            // a x = alpha t + u (alpha t' + beta t)
            w.a.push_back(trace_[at]);
            w.b.push_back(trace_[F.add(F.mul(a.a.value, tp), bt)]);
        }
    }
    return w;
}

namespace {

// Lee weight of ev(alpha + u beta) given alpha_elem[j] = alpha * elem(j).
std::uint64_t weight_kernel(const gf::Field& F, const std::vector<gf::Index>& t, const std::vector<gf::Index>& trace,
                            gf::Index alpha, gf::Index beta, const std::vector<gf::Index>& alpha_elem) {
    std::uint64_t w = 0;
    for (gf::Index ti : t) {
        const gf::Index A = trace[F.mul(alpha, ti)];
        const gf::Index bt = F.mul(beta, ti);
        for (gf::Index y : alpha_elem) {
            const gf::Index B = trace[F.add(y, bt)];
            w += (B != 0) + (F.add(A, B) != 0);
        }
    }
    return w;
}

}  // namespace

std::uint64_t TraceCode::weight_of(gf::Index alpha, gf::Index beta) const {
    const gf::Field& F = field();
    std::vector<gf::Index> alpha_elem(elem_.size());
    for (std::size_t j = 0; j < elem_.size(); ++j) alpha_elem[j] = F.mul(alpha, elem_[j]);
    return weight_kernel(F, t_, trace_, alpha, beta, alpha_elem);
}

SpectrumResult TraceCode::brute_force_spectrum(std::uint64_t budget, unsigned workers) const {
    const std::uint64_t r = spec_.r;
    const long double work = static_cast<long double>(r) * r * spec_.n;
    if (work > static_cast<long double>(budget)) {
        std::ostringstream os;
        os << "brute force needs " << std::setprecision(4) << static_cast<double>(work)
           << " coordinate evaluations, budget is " << budget << "; use representative_spectrum_check";
        throw BudgetExceeded(os.str());
    }
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, r));

    const gf::Field& F = field();
    // Units first in dlog order of alpha, then the nilpotent row alpha = 0; beta by field index.
    std::vector<gf::Index> alphas(elem_.begin() + 1, elem_.end());
    alphas.push_back(0);

    std::vector<WeightDistribution> partial(workers);
    auto run = [&](unsigned w) {
        std::map<std::uint64_t, std::uint64_t> hist;
        std::vector<gf::Index> alpha_elem(elem_.size());
        for (std::uint64_t idx = w; idx < alphas.size(); idx += workers) {
            const gf::Index alpha = alphas[idx];
            for (std::size_t j = 0; j < elem_.size(); ++j) alpha_elem[j] = F.mul(alpha, elem_[j]);
            for (gf::Index beta = 0; beta < r; ++beta) ++hist[weight_kernel(F, t_, trace_, alpha, beta, alpha_elem)];
        }
        partial[w] = WeightDistribution(std::move(hist));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    SpectrumResult out;
    for (const auto& part : partial) out.distribution.merge(part);
    out.kernel_size = out.distribution.frequency(0);
    if (out.kernel_size == 0) throw ArithmeticError("zero element missing from the spectrum");
    out.codeword_count = r * r / out.kernel_size;
    return out;
}

std::vector<StratumWeight> TraceCode::representative_spectrum_check() const {
    const gf::Field& F = field();
    std::vector<StratumWeight> out;
    out.push_back({-1, ext_.one(), weight_of(1, 0), spec_.r * spec_.r - spec_.r});
    for (std::uint64_t i = 0; i < spec_.N; ++i) {
        const gf::Index beta = F.exp(static_cast<std::int64_t>(i));
        out.push_back({static_cast<int>(i), ext_.make(0, beta), weight_of(0, beta), (spec_.r - 1) / spec_.N});
    }
    return out;
}

WeightDistribution distribution_from_strata(const CodeSpec& spec, const std::vector<StratumWeight>& strata) {
    WeightDistribution d;
    d.add(0, 1);
    std::uint64_t covered = 1;
    for (const auto& st : strata) {
        d.add(st.weight, st.frequency);
        covered += st.frequency;
    }
    if (covered != spec.r * spec.r) throw InvalidArgument("strata do not cover the ring");
    return d;
}

}  // namespace tracecodes::code
