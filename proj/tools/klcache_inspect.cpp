/**
 * Inspector for the persisted Kazhdan-Lusztig table cache.
 *
 * File layout (all integers little-endian, 8 bytes):
 *   u64 magic
 *   u64 type, u64 rank, u64 length bound, u64 element count
 *   per element: rank x i64 signed-permutation window,
 *                rank x i64 doubled translation coordinates
 *   per element: u64 row size, then per entry
 *                u64 y index, u64 coefficient count, i64 coefficients
 *                (polynomial in the Hecke variable v, low degree first)
 *
 * The parser here is deliberately self-contained; only the length
 * recomputation and the pretty-printers come from the library.
 */

#include "CLI11.hpp"

#include "weylq/hecke.hpp"
#include "weylq/rootsys.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

constexpr std::uint64_t expected_magic = 0x314c4b5251594557ull;

struct Reader {
    std::string buf;
    std::size_t pos = 0;

    bool u64(std::uint64_t& out) {
        if (pos + 8 > buf.size()) return false;
        out = 0;
        for (int i = 0; i < 8; ++i)
            out |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
        pos += 8;
        return true;
    }

    bool i64(weylq::i64& out) {
        std::uint64_t u = 0;
        if (!u64(u)) return false;
        out = static_cast<weylq::i64>(u);
        return true;
    }
};

int fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inspect a persisted Kazhdan-Lusztig table cache file"};
    std::string path;
    bool dump_rows = false;
    app.add_option("file", path, "cache file to inspect")->required();
    app.add_flag("--rows", dump_rows, "dump every table row as text");
    CLI11_PARSE(app, argc, argv);

    Reader r;
    {
        std::error_code ec;
        if (!std::filesystem::is_regular_file(path, ec))
            return fail(path + " is not a regular file");
        std::ifstream is(path, std::ios::binary);
        if (!is) return fail("cannot open " + path);
        r.buf.assign(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
        if (is.bad()) return fail("read failure on " + path);
    }

    std::uint64_t magic = 0, type_raw = 0, rank = 0, bound = 0, count = 0;
    if (!r.u64(magic)) return fail("file too short for the magic number");
    if (magic != expected_magic) return fail("magic number mismatch: not a table cache");
    if (!r.u64(type_raw) || !r.u64(rank) || !r.u64(bound) || !r.u64(count))
        return fail("truncated header");
    if (type_raw > 3) return fail("unknown root-system type tag");
    if (rank == 0 || rank > 12) return fail("implausible rank");

    const auto type = static_cast<weylq::Type>(type_raw);
    std::cout << "type " << weylq::type_to_string(type) << rank << ", length bound " << bound
              << ", " << count << " elements, " << r.buf.size() << " bytes\n";

    const weylq::RootSystem rs = weylq::RootSystem::build(type, static_cast<int>(rank));
    std::vector<weylq::AffineElement> elems;
    std::map<weylq::i64, std::size_t> by_length;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::vector<int> window(rank);
        std::vector<weylq::i64> doubled(rank);
        for (auto& v : window) {
            weylq::i64 x = 0;
            if (!r.i64(x)) return fail("truncated element block");
            v = static_cast<int>(x);
        }
        for (auto& v : doubled)
            if (!r.i64(v)) return fail("truncated element block");
        weylq::AffineElement e{weylq::SignedPerm::from_window(std::move(window)),
                               weylq::Weight::of_doubled(std::move(doubled))};
        ++by_length[weylq::affine_length(rs, e)];
        elems.push_back(std::move(e));
    }

    std::cout << "elements per length:";
    for (const auto& [l, n] : by_length) std::cout << " " << l << ":" << n;
    std::cout << "\n";

    std::size_t entries = 0, coeff_sum = 0;
    int max_degree = -1;
    for (std::uint64_t w = 0; w < count; ++w) {
        std::uint64_t nrow = 0;
        if (!r.u64(nrow)) return fail("truncated row table");
        if (dump_rows) std::cout << elems[w].str() << ":\n";
        for (std::uint64_t k = 0; k < nrow; ++k) {
            std::uint64_t y = 0, ncoeff = 0;
            if (!r.u64(y) || !r.u64(ncoeff)) return fail("truncated row entry");
            if (y >= count) return fail("row entry references an element out of range");
            weylq::QPoly p;
            for (std::uint64_t c = 0; c < ncoeff; ++c) {
                weylq::i64 x = 0;
                if (!r.i64(x)) return fail("truncated coefficient list");
                p += weylq::QPoly::monomial(x, static_cast<std::size_t>(c));
            }
            ++entries;
            coeff_sum += ncoeff;
            max_degree = std::max(max_degree, p.degree());
            if (dump_rows)
                std::cout << "  " << elems[y].str() << "  " << p.str("v") << "\n";
        }
    }
    if (r.pos != r.buf.size()) return fail("trailing bytes after the row table");

    std::cout << "rows " << count << ", entries " << entries << ", stored coefficients "
              << coeff_sum << ", max v-degree " << max_degree << "\n";
    return 0;
}
