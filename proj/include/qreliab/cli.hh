#ifndef QRELIAB_CLI_HH
#define QRELIAB_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace qreliab {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 when the computation fails, 2 on usage errors.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace qreliab

#endif // QRELIAB_CLI_HH
