#include "regge6j/table.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "regge6j/errors.hpp"
#include "regge6j/racah.hpp"

namespace regge6j {

namespace {

void validate(const TableConfig& config) {
    if (config.max_spin.twice < 0) throw std::domain_error("max_spin must be nonnegative");
    if (config.workers < 1) throw std::domain_error("workers must be at least 1");
}

bool tuple_valid(const std::array<int, 6>& t, Mode mode) {
    const int p1 = t[0] + t[4] + t[5], p2 = t[3] + t[1] + t[5], p3 = t[3] + t[4] + t[2],
              p4 = t[0] + t[1] + t[2];
    if (mode == Mode::standard && ((p1 | p2 | p3 | p4) & 1)) return false;
    const int q1 = t[1] + t[2] + t[4] + t[5], q2 = t[0] + t[3] + t[2] + t[5],
              q3 = t[0] + t[3] + t[1] + t[4];
    const int pmax = std::max(std::max(p1, p2), std::max(p3, p4));
    return std::min(q1, std::min(q2, q3)) >= pmax;
}

} // namespace

std::vector<SixJSymbol> enumerate_symbols(const TableConfig& config) {
    validate(config);
    const int D = config.max_spin.twice;
    std::vector<SixJSymbol> out;
    std::array<int, 6> t{};
    // A canonical tuple starts with its global minimum, so every other
    // entry scans from t[0] upward.
    for (t[0] = 0; t[0] <= D; ++t[0])
        for (t[1] = t[0]; t[1] <= D; ++t[1])
            for (t[2] = t[0]; t[2] <= D; ++t[2])
                for (t[3] = t[0]; t[3] <= D; ++t[3])
                    for (t[4] = t[0]; t[4] <= D; ++t[4])
                        for (t[5] = t[0]; t[5] <= D; ++t[5]) {
                            if (!tuple_valid(t, config.mode)) continue;
                            const SixJSymbol s{{t[0]}, {t[1]}, {t[2]}, {t[3]}, {t[4]}, {t[5]}};
                            if (is_canonical(s)) out.push_back(s);
                        }
    return out;
}

std::string render_line(const SixJSymbol& s, const SqrtRationalValue& value,
                        std::optional<Parity> parity) {
    std::string out;
    for (int v : s.doubled()) {
        out += std::to_string(v);
        out += ' ';
    }
    if (parity) {
        out += parity_marker(*parity);
        out += ' ';
    }
    out += render(to_rotenberg(value));
    return out;
}

TableLine parse_line(std::string_view line, Mode mode) {
    std::istringstream in{std::string(line)};
    std::array<int, 6> d{};
    for (auto& v : d)
        if (!(in >> v)) throw std::invalid_argument("bad spin field in table line");
    TableLine out{make_symbol(d), {}, std::nullopt};
    if (mode == Mode::super) {
        std::string marker;
        if (!(in >> marker)) throw std::invalid_argument("missing parity marker");
        if (marker == "<a>")
            out.parity = Parity::alpha;
        else if (marker == "<b>")
            out.parity = Parity::beta;
        else if (marker == "<g>")
            out.parity = Parity::gamma;
        else
            throw std::invalid_argument("bad parity marker: " + marker);
    }
    std::string rest;
    std::getline(in, rest);
    out.value = from_rotenberg(parse_rotenberg(rest));
    return out;
}

std::string table_file_name(Mode mode) {
    return mode == Mode::standard ? "standardtable.txt" : "supertable.txt";
}

std::string class_file_name(Mode mode, Parity parity, PartitionClass cls) {
    std::string out = mode == Mode::standard ? "standard" : "super";
    out += parity_letter(parity);
    out += std::to_string(class_index(cls));
    out += ".txt";
    return out;
}

std::vector<std::pair<Parity, PartitionClass>> class_roster(Mode mode) {
    using enum PartitionClass;
    if (mode == Mode::standard)
        return {{Parity::alpha, S0}, {Parity::alpha, S1}, {Parity::alpha, S2}, {Parity::alpha, S5}};
    std::vector<std::pair<Parity, PartitionClass>> out;
    for (Parity p : {Parity::alpha, Parity::beta, Parity::gamma})
        for (PartitionClass c : {S0, S1, S2, S5}) {
            if (p == Parity::beta && (c == S2 || c == S5)) continue;
            out.emplace_back(p, c);
        }
    return out;
}

namespace {

struct ChunkOutput {
    std::string table;
    std::vector<std::string> per_class;
};

int roster_slot(const std::vector<std::pair<Parity, PartitionClass>>& roster, Parity p,
                PartitionClass c) {
    for (std::size_t i = 0; i < roster.size(); ++i)
        if (roster[i].first == p && roster[i].second == c) return static_cast<int>(i);
    throw internal_error("class outside the roster: " + to_string(c));
}

} // namespace

int run(const TableConfig& config) {
    try {
        validate(config);
        const auto symbols = enumerate_symbols(config);
        const auto roster = class_roster(config.mode);

        std::error_code ec;
        std::filesystem::create_directories(config.output_dir, ec);
        if (ec) {
            std::cerr << "cannot create output directory " << config.output_dir << ": "
                      << ec.message() << "\n";
            return 1;
        }

        constexpr std::size_t chunk_len = 1024;
        const std::size_t nchunks = symbols.empty() ? 0 : (symbols.size() + chunk_len - 1) / chunk_len;
        std::vector<ChunkOutput> chunks(nchunks);
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::string first_error;
        std::mutex error_mutex;

        auto worker = [&] {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= nchunks || failed.load(std::memory_order_relaxed)) break;
                try {
                    ChunkOutput& out = chunks[c];
                    if (config.classify) out.per_class.resize(roster.size());
                    const std::size_t lo = c * chunk_len;
                    const std::size_t hi = std::min(symbols.size(), lo + chunk_len);
                    for (std::size_t i = lo; i < hi; ++i) {
                        const SixJSymbol& s = symbols[i];
                        std::optional<Parity> parity;
                        SqrtRationalValue value;
                        if (config.mode == Mode::super) {
                            parity = parity_of(s);
                            value = eval_super_6j(s);
                        } else {
                            value = eval_6j(s);
                        }
                        std::string line = render_line(s, value, parity);
                        line += '\n';
                        out.table += line;
                        if (config.classify) {
                            const PartitionClass cls = classify(s, config.mode);
                            if (cls != classify_oracle(s, config.mode))
                                throw internal_error("classifier disagrees with the closure oracle on " +
                                                     to_string(s));
                            const Parity fp = parity.value_or(Parity::alpha);
                            out.per_class[static_cast<std::size_t>(roster_slot(roster, fp, cls))] +=
                                line;
                        }
                    }
                } catch (const std::exception& e) {
                    std::lock_guard lock(error_mutex);
                    if (!failed.exchange(true)) first_error = e.what();
                    break;
                }
            }
        };

        const int nthreads = static_cast<int>(
            std::min<std::size_t>(static_cast<std::size_t>(config.workers), std::max<std::size_t>(nchunks, 1)));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failed) {
            std::cerr << "table generation failed: " << first_error << "\n";
            return 2;
        }

        std::ofstream table(config.output_dir / table_file_name(config.mode),
                            std::ios::binary | std::ios::trunc);
        for (const auto& chunk : chunks) table << chunk.table;
        table.flush();
        if (!table) {
            std::cerr << "cannot write " << (config.output_dir / table_file_name(config.mode))
                      << "\n";
            return 1;
        }

        if (config.classify) {
            for (std::size_t slot = 0; slot < roster.size(); ++slot) {
                const auto path = config.output_dir /
                                  class_file_name(config.mode, roster[slot].first, roster[slot].second);
                std::ofstream file(path, std::ios::binary | std::ios::trunc);
                for (const auto& chunk : chunks)
                    if (!chunk.per_class.empty()) file << chunk.per_class[slot];
                file.flush();
                if (!file) {
                    std::cerr << "cannot write " << path << "\n";
                    return 1;
                }
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "table generation failed: " << e.what() << "\n";
        return 2;
    }
}

} // namespace regge6j
