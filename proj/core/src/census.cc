#include <maltsev/census.hh>
#include <maltsev/errors.hh>
#include <maltsev/oracle.hh>
#include <maltsev/structure.hh>
#include <maltsev/synth.hh>

#include <algorithm>
#include <array>
#include <exception>
#include <numeric>
#include <thread>

using namespace maltsev;

using std::string;
using std::uint64_t;
using std::vector;

auto maltsev::to_string(EnumerationMode mode) -> string
{
    return mode == EnumerationMode::labeled ? "labeled" : "up_to_iso";
}

auto maltsev::parse_enumeration_mode(const string & name) -> EnumerationMode
{
    if (name == "labeled")
        return EnumerationMode::labeled;
    if (name == "up_to_iso")
        return EnumerationMode::up_to_iso;
    throw ArgumentError("unknown enumeration mode '" + name + "'");
}

namespace
{
    auto check_size(int n) -> void
    {
        if (n < 0 || n > max_census_size)
            throw ArgumentError("enumeration supports 0 <= n <= " + std::to_string(max_census_size) + ", got " + std::to_string(n));
    }

    // Rows are encoded most-significant-first: column v sits at bit n-1-v.
    struct Relabelling
    {
        vector<int> inverse;
        vector<std::uint8_t> row_image;
    };

    auto relabellings(int n) -> const vector<Relabelling> &
    {
        static const auto all = [] {
            std::array<vector<Relabelling>, max_census_size + 1> result;
            for (int size = 0; size <= max_census_size; ++size) {
                vector<int> perm(size);
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    Relabelling r;
                    r.inverse.resize(size);
                    for (int v = 0; v < size; ++v)
                        r.inverse[perm[v]] = v;
                    r.row_image.resize(std::size_t{1} << size);
                    for (unsigned row = 0; row < r.row_image.size(); ++row) {
                        unsigned image = 0;
                        for (int v = 0; v < size; ++v)
                            if (row >> (size - 1 - v) & 1)
                                image |= 1u << (size - 1 - perm[v]);
                        r.row_image[row] = std::uint8_t(image);
                    }
                    result[size].push_back(std::move(r));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
            return result;
        }();
        return all[n];
    }

    auto rows_of(int n, uint64_t mask) -> std::array<unsigned, max_census_size>
    {
        std::array<unsigned, max_census_size> rows{};
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (mask >> (u * n + v) & 1)
                    rows[u] |= 1u << (n - 1 - v);
        return rows;
    }

    auto key_of_rows(int n, const std::array<unsigned, max_census_size> & rows) -> uint64_t
    {
        uint64_t key = 0;
        for (int u = 0; u < n; ++u)
            key = (key << n) | rows[u];
        return key;
    }
}

auto maltsev::adjacency_key(const Digraph & graph) -> uint64_t
{
    check_size(graph.size());
    return key_of_rows(graph.size(), rows_of(graph.size(), graph.adjacency_mask()));
}

auto maltsev::canonical_key(const Digraph & graph) -> uint64_t
{
    auto n = graph.size();
    check_size(n);
    auto rows = rows_of(n, graph.adjacency_mask());

    auto best = key_of_rows(n, rows);
    for (auto & r : relabellings(n)) {
        std::array<unsigned, max_census_size> image{};
        for (int a = 0; a < n; ++a)
            image[a] = r.row_image[rows[r.inverse[a]]];
        best = std::min(best, key_of_rows(n, image));
    }
    return best;
}

auto maltsev::is_canonical(int n, uint64_t adjacency_mask) -> bool
{
    check_size(n);
    auto rows = rows_of(n, adjacency_mask);
    for (auto & r : relabellings(n))
        for (int a = 0; a < n; ++a) {
            auto image = r.row_image[rows[r.inverse[a]]];
            if (image < rows[a])
                return false;
            if (image > rows[a])
                break;
        }
    return true;
}

auto maltsev::for_each_digraph(int n, EnumerationMode mode, uint64_t first, uint64_t last,
    const std::function<void (uint64_t, const Digraph &)> & visit) -> void
{
    check_size(n);
    last = std::min(last, uint64_t{1} << (n * n));
    for (auto mask = first; mask < last; ++mask) {
        if (mode == EnumerationMode::up_to_iso && ! is_canonical(n, mask))
            continue;
        visit(mask, Digraph::from_adjacency_mask(n, mask));
    }
}

auto maltsev::for_each_digraph(int n, EnumerationMode mode, const std::function<void (uint64_t, const Digraph &)> & visit) -> void
{
    check_size(n);
    for_each_digraph(n, mode, 0, uint64_t{1} << (n * n), visit);
}

auto maltsev::enumerate_digraphs(int n, EnumerationMode mode) -> vector<Digraph>
{
    vector<Digraph> result;
    for_each_digraph(n, mode, [&](uint64_t, const Digraph & g) { result.push_back(g); });
    return result;
}

namespace
{
    auto classify_range(int n, EnumerationMode mode, uint64_t first, uint64_t last) -> CensusRow
    {
        CensusRow row;
        row.n = n;
        row.mode = mode;
        for_each_digraph(n, mode, first, last, [&](uint64_t, const Digraph & g) {
            ++row.total;
            if (is_rectangular(g))
                ++row.rectangular;

            bool maltsev = bool(decide_maltsev(g));
            if (maltsev)
                ++row.maltsev;

            if (n <= 3) {
                if (find_polymorphism_bruteforce(g, IdentityKind::majority))
                    ++row.majority;
            }
            else if (maltsev) {
                // synth re-verifies its table and throws otherwise.
                (void) synth_majority(g);
                ++row.majority;
            }
        });
        return row;
    }
}

auto maltsev::count_maltsev(int n, EnumerationMode mode, unsigned workers) -> CensusRow
{
    check_size(n);
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());

    uint64_t space = uint64_t{1} << (n * n);
    workers = unsigned(std::min<uint64_t>(workers, space));

    vector<CensusRow> shards(workers);
    vector<std::exception_ptr> failures(workers);
    {
        vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                try {
                    shards[w] = classify_range(n, mode, space * w / workers, space * (w + 1) / workers);
                }
                catch (...) {
                    failures[w] = std::current_exception();
                }
            });
    }
    for (auto & f : failures)
        if (f)
            std::rethrow_exception(f);

    CensusRow result;
    result.n = n;
    result.mode = mode;
    for (auto & s : shards) {
        result.total += s.total;
        result.rectangular += s.rectangular;
        result.maltsev += s.maltsev;
        result.majority += s.majority;
    }
    return result;
}

auto maltsev::census_csv_header() -> string
{
    return "n,mode,total,rectangular,maltsev,majority";
}

auto maltsev::to_csv(const CensusRow & row) -> string
{
    return std::to_string(row.n) + "," + to_string(row.mode) + "," + std::to_string(row.total) + "," + std::to_string(row.rectangular) + "," + std::to_string(row.maltsev) + "," + std::to_string(row.majority);
}

auto maltsev::smallest_rectangular_non_maltsev(int max_n) -> std::optional<RectangularNonMaltsev>
{
    check_size(max_n);
    for (int n = 0; n <= max_n; ++n)
        for (uint64_t mask = 0; mask < uint64_t{1} << (n * n); ++mask) {
            auto g = Digraph::from_adjacency_mask(n, mask);
            if (! is_rectangular(g))
                continue;
            if (auto certificate = decide_maltsev(g); ! certificate)
                return RectangularNonMaltsev{std::move(g), std::move(certificate)};
        }
    return std::nullopt;
}
