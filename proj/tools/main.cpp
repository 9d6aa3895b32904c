#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace
{

using beliefrev::cli::command_result;
using beliefrev::cli::options;
namespace exit_code = beliefrev::cli::exit_code;

struct file_error
{
    std::string message;
};

std::string slurp( const std::string& path )
{
    if ( path.empty() || path == "-" )
        return { std::istreambuf_iterator< char >( std::cin ), std::istreambuf_iterator< char >() };
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw file_error{ "cannot read " + path };
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit( const command_result& r )
{
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Iterated belief revision over belief algebras" };
    app.require_subcommand( 1 );

    options opt;
    std::string input_path;
    std::vector< std::string > evidence_paths;

    auto add_input = [ & ]( CLI::App* sub ) {
        sub->add_option( "-i,--input", input_path, "Input document (default: stdin)" );
        sub->add_option( "--max-worlds", opt.max_worlds, "Cap on the number of worlds" )
                ->check( CLI::Range( 1, beliefrev::max_representable_worlds ) );
    };

    auto* gen = app.add_subcommand( "gen", "Smallest belief algebra containing the pairs" );
    add_input( gen );
    auto* backbone = app.add_subcommand( "backbone", "Backbone of the generated algebra" );
    add_input( backbone );
    auto* com = app.add_subcommand( "com", "Completion of the generated algebra" );
    add_input( com );

    auto* revise = app.add_subcommand( "revise", "Revise the input belief by evidence" );
    add_input( revise );
    revise->add_option( "--evidence", evidence_paths, "Evidence document (repeatable)" );
    revise->add_option( "--formula", opt.formulas, "Evidence formula mu, read as [mu] >> [!mu] (repeatable)" );
    revise->add_option( "--conditional", opt.conditionals, "Conditional evidence \"beta|alpha\" (repeatable)" );
    revise->add_flag( "--trace", opt.trace, "Also print the intermediate steps" );
    revise->add_flag( "--as-generators", opt.as_generators, "Print a small generating set of the result" );

    auto* revise_preorder = app.add_subcommand( "revise-preorder", "Revise a total preorder by another" );
    add_input( revise_preorder );
    revise_preorder->add_option( "--evidence", evidence_paths, "Evidence preorder document" )->required();

    auto* check = app.add_subcommand( "check", "Axiom report, or a seeded postulate fuzz run" );
    add_input( check );
    check->add_option( "--fuzz", opt.fuzz, "Number of sampled revision trials" )->check( CLI::NonNegativeNumber );
    check->add_option( "--seed", opt.seed, "Seed for --fuzz" );

    auto* demo = app.add_subcommand( "demo", "Run the worked revision scenario" );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e );
        return code == 0 ? exit_code::ok : exit_code::input;
    }

    try
    {
        if ( demo->parsed() )
            return emit( beliefrev::cli::cmd_demo() );
        if ( !( check->parsed() && opt.fuzz > 0 ) )
            opt.input_text = slurp( input_path );
        for ( const auto& path : evidence_paths )
            opt.evidence_texts.push_back( slurp( path ) );
    }
    catch ( const file_error& e )
    {
        std::cerr << "error: " << e.message << "\n";
        return exit_code::input;
    }

    if ( gen->parsed() )
        return emit( beliefrev::cli::cmd_gen( opt ) );
    if ( backbone->parsed() )
        return emit( beliefrev::cli::cmd_backbone( opt ) );
    if ( com->parsed() )
        return emit( beliefrev::cli::cmd_com( opt ) );
    if ( revise->parsed() )
        return emit( beliefrev::cli::cmd_revise( opt ) );
    if ( revise_preorder->parsed() )
        return emit( beliefrev::cli::cmd_revise_preorder( opt ) );
    return emit( beliefrev::cli::cmd_check( opt ) );
}
