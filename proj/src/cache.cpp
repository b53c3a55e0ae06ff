#include "qtsym/macdonald.hpp"

#include <fstream>
#include <mutex>
#include <algorithm>
#include <sstream>

namespace qtsym {

namespace {

std::string hash_hex(const std::string& data) {
    std::ostringstream os;
    os << std::hex << fnv1a(data);
    return os.str();
}

// normalization test h_{|mu|}^perp H~_mu = 1, i.e. the coefficients sum to 1
bool normalization_ok(const SymFunc& H) {
    RatQT sum(H.vars());
    for (const auto& [la, c] : H.coeffs()) sum += c;
    return sum.is_one();
}

}  // namespace

MacBasis::CacheStatus MacBasis::cache_load(const std::filesystem::path& dir) {
    CacheStatus st;
    auto manifest_path = dir / "manifest";
    if (!std::filesystem::exists(manifest_path)) return st;
    std::ifstream mf(manifest_path);
    std::string line;
    if (!std::getline(mf, line) || line.rfind("maxdeg ", 0) != 0)
        throw std::runtime_error("cache: bad manifest header");
    std::map<std::string, std::string> hashes;
    while (std::getline(mf, line)) {
        if (line.empty()) continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos) throw std::runtime_error("cache: bad manifest line: " + line);
        hashes.emplace(line.substr(0, sp), line.substr(sp + 1));
    }
    VarListPtr V = qt_vars();
    for (const auto& [name, expect_hash] : hashes) {
        auto file = dir / (name + ".sym");
        if (!std::filesystem::exists(file)) continue;  // missing: recomputed on demand
        std::ifstream in(file);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        std::string pname = name;
        std::replace(pname.begin(), pname.end(), '-', '.');
        Partition mu = Partition::parse_dotted(pname);
        bool ok = hash_hex(text) == expect_hash;
        SymFunc H(V);
        if (ok) {
            try {
                H = SymFunc::deserialize(text, V);
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (ok) ok = normalization_ok(H) && H.degree() == mu.size();
        if (!ok) {
            st.rejected.push_back(mu.dashed());
            continue;
        }
        std::unique_lock lock(mu_);
        table_.emplace(mu, std::move(H));
        ++st.loaded;
    }
    return st;
}

MacBasis::CacheStatus MacBasis::cache_store(const std::filesystem::path& dir) {
    CacheStatus st;
    std::filesystem::create_directories(dir);
    std::map<Partition, const SymFunc*> snapshot;
    int maxdeg = 0;
    {
        std::shared_lock lock(mu_);
        for (const auto& [mu, H] : table_) {
            if (mu.empty()) continue;
            snapshot.emplace(mu, &H);
            maxdeg = std::max(maxdeg, mu.size());
        }
    }
    std::ostringstream manifest;
    manifest << "maxdeg " << maxdeg << "\n";
    for (const auto& [mu, H] : snapshot) {
        std::string text = H->serialize();
        auto file = dir / (mu.dashed() + ".sym");
        std::ofstream out(file);
        out << text;
        if (!out) throw std::runtime_error("cache: cannot write " + file.string());
        manifest << mu.dashed() << " " << hash_hex(text) << "\n";
        ++st.stored;
    }
    std::ofstream mf(dir / "manifest");
    mf << manifest.str();
    if (!mf) throw std::runtime_error("cache: cannot write manifest");
    return st;
}

}  // namespace qtsym
