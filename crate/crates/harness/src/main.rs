//! `rmmld` — RM(r, m) encoding, one-step majority-logic decoding, and
//! verification campaigns.
//!
//! Exit codes: 0 success, 1 verification failure (a theorem-violating
//! witness was found), 2 usage error.

use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rmmld_core::code::code_params;
use rmmld_core::decode::{mld_decode_erasures, mld_decode_errors};
use rmmld_core::recovery::FamilyDump;
use rmmld_core::{GeneratorMatrix, Guards, Monomial, ReceivedWord, RecoveryFamilies};

use rmmld_harness::campaign::{self, MessagePolicy, PatternMode, DEFAULT_PATTERN_CAP, DEFAULT_WITNESS_CAP};
use rmmld_harness::report::CampaignReport;
use rmmld_harness::{io as wordio, sim};

#[derive(Parser)]
#[command(
    name = "rmmld",
    version,
    about = "Binary Reed-Muller codes with one-step majority-logic decoding"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CodeArgs {
    /// Code order r (0 <= r < m)
    #[arg(short, long)]
    r: usize,
    /// Length exponent m (n = 2^m)
    #[arg(short, long)]
    m: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the full JSON report to this path ("-" for stdout)
    #[arg(long)]
    json: Option<String>,
    /// Append a CSV summary row to this path
    #[arg(long)]
    csv: Option<String>,
    /// Cap on recorded failure witnesses
    #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
    witnesses: usize,
    /// Worker threads (default: RMMLD_WORKERS or all cores)
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Test patterns of exactly this weight
    #[arg(long, conflicts_with = "max_weight")]
    weight: Option<usize>,
    /// Test all patterns of weight at most this
    #[arg(long)]
    max_weight: Option<usize>,
    /// Enumerate every pattern of the weight class
    #[arg(long)]
    exhaustive: bool,
    /// Draw this many seeded exact-weight patterns instead
    #[arg(long, conflicts_with = "exhaustive")]
    samples: Option<u64>,
    /// Message policy: zero | all-ones | random:N | exhaustive
    /// (default: exhaustive when 2^k <= 4096, else random:256)
    #[arg(long)]
    messages: Option<String>,
    /// PRNG seed; required by any sampled mode
    #[arg(long)]
    seed: Option<u64>,
    /// Cap on decoded patterns
    #[arg(long, default_value_t = DEFAULT_PATTERN_CAP)]
    pattern_cap: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Print the code parameters [n, k, d] as JSON
    Params(CodeArgs),
    /// Encode k message bits (row order, a0 first) into a codeword
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Message bit-string; read from stdin when omitted
        message: Option<String>,
        /// Emit the codeword as hex (x1 = MSB of the first digit)
        #[arg(long)]
        hex: bool,
    },
    /// Decode a received word
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// errors | erasures
        #[arg(long)]
        mode: String,
        /// Received word; bit-string (erasures as '?') or 0x-hex; stdin
        /// when omitted
        word: Option<String>,
        /// Erasure mask as a separate bit-string (alternative to '?')
        #[arg(long)]
        mask: Option<String>,
        /// Emit the full decode report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Dump the recovery-set families as JSON
    Families {
        #[command(flatten)]
        code: CodeArgs,
        /// Restrict to one symbol: comma-separated variable indices, or 0
        /// for the constant term
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Run verification campaigns; exits 1 on any theorem violation
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Seeded Monte-Carlo channel simulation
    #[command(subcommand)]
    Sim(SimCommand),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Error-pattern sweep through the one-step decoder
    Errors(SweepArgs),
    /// Erasure-pattern sweep through the one-step decoder
    Erasures(SweepArgs),
    /// Compare transversal constructions against brute force
    Transversal {
        /// Check every (m, subspace dim, flat dim) with m up to this
        #[arg(long, default_value_t = 5)]
        max_m: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum SimCommand {
    /// Binary symmetric channel with crossover probability p
    Bsc {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(short, long)]
        p: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Comma-separated: mld, reed, ml
        #[arg(long, default_value = "mld")]
        decoders: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Binary erasure channel with erasure probability epsilon
    Bec {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    // Die quietly when a pipe reader (head, grep -q) goes away.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let guards = Guards::default();
    match cli.command {
        Command::Params(code) => {
            let params = code_params(code.r, code.m)?;
            println!("{}", serde_json::to_string(&params)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Encode { code, message, hex } => {
            let g = GeneratorMatrix::new(code.r, code.m, &guards)?;
            let text = read_arg_or_stdin(message)?;
            let msg = wordio::parse_bits(&text, g.params().k)?;
            let word = g.encode(&msg)?;
            if hex {
                println!("{}", wordio::to_hex(&word)?);
            } else {
                println!("{}", word.to_bit_string());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode {
            code,
            mode,
            word,
            mask,
            json,
        } => {
            let g = GeneratorMatrix::new(code.r, code.m, &guards)?;
            let families = RecoveryFamilies::build(&g, &guards)?;
            let n = g.params().n;
            let text = read_arg_or_stdin(word)?;
            let (bits, inline_mask) = wordio::parse_word(&text, n)?;
            let erasures = match mask {
                Some(mask_text) => {
                    if !inline_mask.is_zero() {
                        bail!("give erasures either inline with '?' or via --mask, not both");
                    }
                    wordio::parse_bits(&mask_text, n)?
                }
                None => inline_mask,
            };
            let received = ReceivedWord::new(bits, erasures)?;
            let report = match mode.as_str() {
                "errors" => mld_decode_errors(&received, &g, &families)?,
                "erasures" => mld_decode_erasures(&received, &g, &families)?,
                other => bail!("unknown decode mode {other:?} (errors | erasures)"),
            };
            if json {
                let per_symbol: Vec<serde_json::Value> = report
                    .per_symbol
                    .iter()
                    .map(|s| {
                        serde_json::json!({
                            "sigma": s.sigma.vars(),
                            "label": s.sigma.label(),
                            "votes_for_0": s.votes_for_0,
                            "votes_for_1": s.votes_for_1,
                            "tie": s.tie,
                            "unrecoverable": s.unrecoverable,
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "message": report.message.to_bit_string(),
                    "status": report.status,
                    "per_symbol": per_symbol,
                });
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                println!("message: {}", report.message.to_bit_string());
                println!("status: {}", serde_json::to_value(report.status)?.as_str().unwrap());
                for s in report.per_symbol.iter().filter(|s| s.unrecoverable) {
                    println!("unrecoverable: {}", s.sigma.label());
                }
                for s in report.per_symbol.iter().filter(|s| s.tie) {
                    println!("tie: {}", s.sigma.label());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Families { code, sigma } => {
            let g = GeneratorMatrix::new(code.r, code.m, &guards)?;
            let families = RecoveryFamilies::build(&g, &guards)?;
            match sigma {
                Some(text) => {
                    let sigma = parse_sigma(&text, code.m)?;
                    let row = g.row_index(&sigma)?;
                    let dump = FamilyDump::new(families.family(row), g.params());
                    println!("{}", serde_json::to_string_pretty(&dump)?);
                }
                None => {
                    let dumps: Vec<FamilyDump> = families
                        .families()
                        .iter()
                        .map(|f| FamilyDump::new(f, g.params()))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&dumps)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(what) => {
            let report = match what {
                VerifyCommand::Errors(args) => {
                    let (spec, output) = sweep_to_error_spec(args)?;
                    let report = campaign::run_error_campaign(&spec, &guards)?;
                    emit_report(&report, &output)?;
                    report
                }
                VerifyCommand::Erasures(args) => {
                    let (spec, output) = sweep_to_erasure_spec(args)?;
                    let report = campaign::run_erasure_campaign(&spec, &guards)?;
                    emit_report(&report, &output)?;
                    report
                }
                VerifyCommand::Transversal { max_m, output } => {
                    let spec = campaign::TransversalCampaign {
                        max_m,
                        workers: resolve_workers(output.workers),
                        witness_cap: output.witnesses,
                    };
                    let report = campaign::run_transversal_campaign(&spec, &guards)?;
                    emit_report(&report, &output)?;
                    report
                }
            };
            if report.has_violations() {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Sim(channel) => {
            let (spec, output) = match channel {
                SimCommand::Bsc {
                    code,
                    p,
                    trials,
                    seed,
                    decoders,
                    output,
                } => {
                    let decoders = decoders
                        .split(',')
                        .map(|d| sim::DecoderKind::parse(d.trim()))
                        .collect::<Result<Vec<_>>>()?;
                    (
                        sim::SimCampaign {
                            r: code.r,
                            m: code.m,
                            channel: sim::Channel::Bsc { p },
                            trials,
                            seed,
                            decoders,
                            workers: resolve_workers(output.workers),
                            witness_cap: output.witnesses,
                        },
                        output,
                    )
                }
                SimCommand::Bec {
                    code,
                    epsilon,
                    trials,
                    seed,
                    output,
                } => (
                    sim::SimCampaign {
                        r: code.r,
                        m: code.m,
                        channel: sim::Channel::Bec { epsilon },
                        trials,
                        seed,
                        decoders: vec![sim::DecoderKind::Mld],
                        workers: resolve_workers(output.workers),
                        witness_cap: output.witnesses,
                    },
                    output,
                ),
            };
            let report = sim::run_channel_sim(&spec, &guards)?;
            emit_report(&report, &output)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// The constant symbol is written `0`; otherwise comma-separated variable
/// indices, e.g. `1` or `1,2`.
fn parse_sigma(text: &str, m: usize) -> Result<Monomial> {
    let text = text.trim();
    if text == "0" {
        return Ok(Monomial::constant());
    }
    let indices = wordio::parse_indices(text, m)?;
    let bytes: Vec<u8> = indices.iter().map(|&i| i as u8).collect();
    Monomial::new(&bytes, m).map_err(Into::into)
}

fn sweep_weight(args: &SweepArgs) -> Result<(usize, bool)> {
    match (args.weight, args.max_weight) {
        (Some(w), None) => Ok((w, false)),
        (None, Some(w)) => Ok((w, true)),
        _ => bail!("give exactly one of --weight or --max-weight"),
    }
}

fn sweep_mode(args: &SweepArgs) -> Result<PatternMode> {
    match (args.exhaustive, args.samples) {
        (true, None) => Ok(PatternMode::Exhaustive),
        (false, Some(trials)) => Ok(PatternMode::Sampled { trials }),
        (false, None) => bail!("choose --exhaustive or --samples N"),
        (true, Some(_)) => unreachable!("clap conflict"),
    }
}

fn sweep_messages(args: &SweepArgs) -> Result<MessagePolicy> {
    match &args.messages {
        Some(text) => MessagePolicy::parse(text),
        None => {
            let params = code_params(args.code.r, args.code.m)?;
            if params.k <= 12 {
                Ok(MessagePolicy::Exhaustive)
            } else {
                Ok(MessagePolicy::Random(256))
            }
        }
    }
}

fn sweep_to_error_spec(args: SweepArgs) -> Result<(campaign::ErrorCampaign, OutputArgs)> {
    let (weight, at_most) = sweep_weight(&args)?;
    let spec = campaign::ErrorCampaign {
        r: args.code.r,
        m: args.code.m,
        weight,
        at_most,
        mode: sweep_mode(&args)?,
        messages: sweep_messages(&args)?,
        seed: args.seed,
        workers: resolve_workers(args.output.workers),
        pattern_cap: args.pattern_cap,
        witness_cap: args.output.witnesses,
    };
    Ok((spec, args.output))
}

fn sweep_to_erasure_spec(args: SweepArgs) -> Result<(campaign::ErasureCampaign, OutputArgs)> {
    let (weight, at_most) = sweep_weight(&args)?;
    let spec = campaign::ErasureCampaign {
        r: args.code.r,
        m: args.code.m,
        weight,
        at_most,
        mode: sweep_mode(&args)?,
        messages: sweep_messages(&args)?,
        seed: args.seed,
        workers: resolve_workers(args.output.workers),
        pattern_cap: args.pattern_cap,
        witness_cap: args.output.witnesses,
    };
    Ok((spec, args.output))
}

fn resolve_workers(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("RMMLD_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    })
}

fn emit_report(report: &CampaignReport, output: &OutputArgs) -> Result<()> {
    let json = report.to_json();
    match output.json.as_deref() {
        Some("-") => println!("{json}"),
        Some(path) => {
            std::fs::write(path, &json).with_context(|| format!("writing {path}"))?;
            print_summary(report);
        }
        None => print_summary(report),
    }
    if let Some(path) = &output.csv {
        let mut line = String::new();
        if !std::path::Path::new(path).exists() {
            line.push_str(CampaignReport::CSV_HEADER);
            line.push('\n');
        }
        line.push_str(&report.csv_row());
        line.push('\n');
        use std::io::Write;
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .with_context(|| format!("opening {path}"))?;
        file.write_all(line.as_bytes())?;
    }
    Ok(())
}

fn print_summary(report: &CampaignReport) {
    let t = &report.totals;
    println!(
        "{}: patterns={} decodes={} failures={} violations={} ties={} unrecoverable={} ({} ms)",
        report.kind,
        t.patterns,
        t.decodes,
        t.failures,
        t.violations,
        t.ties,
        t.unrecoverable_symbols,
        report.timing.elapsed_ms
    );
    if let Some(est) = &report.estimates {
        for d in &est.per_decoder {
            println!(
                "  {}: fer={:.6e} ({} / {}), ser={:.6e}",
                d.decoder, d.fer, d.frame_errors, est.trials, d.ser
            );
        }
        println!(
            "  analytic tail beyond radius: {:.6e}",
            est.analytic_tail_beyond_radius
        );
    }
    if let Some(results) = &report.transversal_results {
        for tr in results {
            println!(
                "  m={} dim(S)={} flat_dim={}: construction={} bruteforce={} formula={} {}",
                tr.m,
                tr.subspace_dim,
                tr.flat_dim,
                tr.construction_size,
                tr.bruteforce_size,
                tr.formula_size,
                if tr.ok { "ok" } else { "MISMATCH" }
            );
        }
    }
    for w in &report.witnesses {
        println!(
            "  witness: weight={} pattern={:?} message={} decoded={}{}",
            w.weight,
            w.pattern,
            w.message,
            w.decoded,
            if w.violation { " VIOLATION" } else { "" }
        );
    }
}

fn read_arg_or_stdin(arg: Option<String>) -> Result<String> {
    match arg {
        Some(s) => Ok(s),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            Ok(buf.trim().to_string())
        }
    }
}
