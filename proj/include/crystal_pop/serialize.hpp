#pragma once

#include <string>
#include <vector>

#include "crystal_pop/classifier.hpp"
#include "crystal_pop/crystal.hpp"
#include "crystal_pop/perm.hpp"
#include "crystal_pop/pop.hpp"

namespace crystal_pop {

/// {"lambda":[...],"n":..,"vertices":[{"id","rows"}],"edges":[{"src","dst","color"}]}
std::string crystal_to_json(const CrystalGraph& b);

/// One node per tableau labelled with its text form; edges labelled F<i>.
std::string crystal_to_dot(const CrystalGraph& b);

/// Header "vertex,tableau,orbit_length", one row per vertex.
std::string orbit_table_csv(const CrystalGraph& b, const std::vector<std::size_t>& lengths);

/// {"lambda","n","max_orbit","coxeter_number","witness"}
std::string orbit_record_json(const CrystalGraph& b, const MaxOrbit& max);

/// {"kind":"bowtie"|"no-join-pair","construction",..,"tableaux":[...]}
std::string certificate_to_json(const TableauCertificate& certificate);

/// {"lambda","n","keys":[{"id","rows","key"}]}
std::string key_map_to_json(const CrystalGraph& b, const std::vector<Permutation>& keys);

/// Header "lambda,n,predicted,brute_force,clause,vertices,millis,certificate".
/// Skipped rows carry "skipped" in the brute_force column.
std::string sweep_to_csv(const SweepReport& report);

}  // namespace crystal_pop
