use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use damu::aero::{lift_force, min_sustaining_speed, Airframe};
use damu::atmosphere::{feet_from_m, isa_density, isa_sample, knots_from_mps, STANDARD_WATER_VAPOR_G_M3};
use damu::attenuation::{PathIntegrator, Tables, VisibilityClass, WeatherProfile};
use damu::geometry::{turn_radius, turn_radius_ft, Position3D};
use damu::linkbudget::laser_delivery;
use damu::scenario::{self, Scenario};

const NEWTONS_PER_LBF: f64 = 4.448_221_615_260_5;
const KG_PER_LB: f64 = 0.453_592_37;

#[derive(Parser)]
#[command(name = "damu", version, about = "Feasibility and link-budget simulator for multi-layer UAV networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep frequency and write per-component path attenuation as CSV.
    Atten(AttenArgs),
    /// Lift, minimum speed and turn radius.
    #[command(subcommand)]
    Aero(AeroCommand),
    /// Validate and simulate a scenario file.
    #[command(subcommand)]
    Scenario(ScenarioCommand),
    /// Standard-atmosphere conditions at an altitude.
    Isa {
        #[arg(long)]
        alt_m: f64,
    },
    /// Laser power delivered over a path.
    Laser {
        #[arg(long)]
        power_w: f64,
        #[arg(long)]
        distance_m: f64,
        #[arg(long, value_enum, default_value = "clear")]
        visibility: Visibility,
        #[arg(long, default_value_t = 1.0)]
        efficiency: f64,
    },
}

#[derive(Args)]
struct AttenArgs {
    #[arg(long)]
    freq_min: f64,
    #[arg(long)]
    freq_max: f64,
    #[arg(long)]
    step: f64,
    /// Preset name or path to a JSON weather file.
    #[arg(long, default_value = "clear")]
    weather: String,
    /// Lower and upper path altitude in meters, e.g. `0,2000`.
    #[arg(long, value_parser = parse_altitudes)]
    path: (f64, f64),
    /// Path elevation above the horizontal.
    #[arg(long, default_value_t = 90.0)]
    elevation_deg: f64,
    /// Report dB/km averaged over the path instead of path totals.
    #[arg(long)]
    per_km: bool,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum AeroCommand {
    /// Lift force at a standard-atmosphere altitude.
    Lift {
        #[arg(long)]
        cl: f64,
        #[arg(long)]
        alt_m: f64,
        #[arg(long)]
        speed_mps: f64,
        #[arg(long)]
        area_m2: f64,
    },
    /// Slowest speed that still carries the given mass.
    Minspeed {
        #[arg(long)]
        cl: f64,
        #[arg(long)]
        alt_m: f64,
        #[arg(long)]
        area_m2: f64,
        #[arg(long)]
        mass_kg: f64,
    },
    /// Radius of a level coordinated turn.
    TurnRadius {
        #[arg(long)]
        speed_mps: f64,
        #[arg(long)]
        bank_deg: f64,
    },
}

#[derive(Subcommand)]
enum ScenarioCommand {
    /// Validate, simulate and write one CSV row per link per timestep.
    Run {
        file: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit with status 3 when any node breaks a layer rule.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Visibility {
    Clear,
    Haze,
    HeavyFog,
}

impl From<Visibility> for VisibilityClass {
    fn from(v: Visibility) -> Self {
        match v {
            Visibility::Clear => VisibilityClass::Clear,
            Visibility::Haze => VisibilityClass::Haze,
            Visibility::HeavyFog => VisibilityClass::HeavyFog,
        }
    }
}

enum Failure {
    Input(String),
    Strict(usize),
}

impl From<damu::Error> for Failure {
    fn from(e: damu::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Atten(args) => atten(args),
        Command::Aero(cmd) => aero(cmd),
        Command::Scenario(ScenarioCommand::Run { file, out, strict }) => run_scenario(&file, out.as_deref(), strict),
        Command::Isa { alt_m } => isa(alt_m),
        Command::Laser {
            power_w,
            distance_m,
            visibility,
            efficiency,
        } => laser(power_w, distance_m, visibility.into(), efficiency),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Strict(n)) => {
            eprintln!("error: {n} validation failure(s) under --strict");
            ExitCode::from(3)
        }
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load_weather(spec: &str) -> Result<WeatherProfile, Failure> {
    if let Some(p) = WeatherProfile::preset(spec) {
        return Ok(p);
    }
    let path = Path::new(spec);
    if !path.is_file() {
        let names: Vec<_> = WeatherProfile::preset_names().collect();
        return Err(Failure::Input(format!(
            "`{spec}` is neither a weather file nor a preset ({})",
            names.join(", ")
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{spec}: {e}")))?;
    Ok(WeatherProfile::from_json(spec, &text)?)
}

fn parse_altitudes(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b] = parts[..] else {
        return Err("expected two altitudes `alt1,alt2`".into());
    };
    let num = |v: &str| v.parse::<f64>().map_err(|e| format!("`{v}`: {e}"));
    Ok((num(a)?, num(b)?))
}

fn sweep(min: f64, max: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !(step > 0.0) || step.is_infinite() {
        return Err(Failure::Input(format!("--step must be > 0, got {step}")));
    }
    for f in [min, max] {
        if !(1.0..=100.0).contains(&f) {
            return Err(Failure::Input(format!("frequency {f} GHz outside [1, 100]")));
        }
    }
    if min > max {
        return Err(Failure::Input(format!("--freq-min {min} > --freq-max {max}")));
    }
    let n = ((max - min) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| min + step * i as f64).collect())
}

fn atten(args: AttenArgs) -> Result<(), Failure> {
    let freqs = sweep(args.freq_min, args.freq_max, args.step)?;
    let profile = load_weather(&args.weather)?;
    if !(args.elevation_deg > 0.0 && args.elevation_deg <= 90.0) {
        return Err(Failure::Input(format!("--elevation-deg {} not in (0, 90]", args.elevation_deg)));
    }
    let (z0, z1) = args.path;
    let offset = if args.elevation_deg == 90.0 {
        0.0
    } else {
        (z1 - z0).abs() / args.elevation_deg.to_radians().tan()
    };
    let (a, b) = (Position3D::new(0.0, 0.0, z0), Position3D::new(offset, 0.0, z1));

    let tables = Tables::from_env()?;
    let integrator = PathIntegrator::new(&tables);
    let unit = if args.per_km { "db_per_km" } else { "db" };
    let mut w = csv::Writer::from_writer(output(args.out.as_deref())?);
    w.write_record([
        "freq_ghz".to_string(),
        format!("gaseous_{unit}"),
        format!("rain_{unit}"),
        format!("cloud_{unit}"),
        format!("fog_{unit}"),
        format!("total_{unit}"),
    ])?;
    for f in freqs {
        let r = integrator.attenuation(&profile, a, b, f)?;
        let scale = if args.per_km { 1_000.0 / r.path_length_m } else { 1.0 };
        let mut row = vec![format!("{f:.3}")];
        row.extend(
            [r.gaseous_db, r.rain_db, r.cloud_db, r.fog_db, r.total_db]
                .iter()
                .map(|v| format!("{:.4}", v * scale)),
        );
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn aero(cmd: AeroCommand) -> Result<(), Failure> {
    match cmd {
        AeroCommand::Lift {
            cl,
            alt_m,
            speed_mps,
            area_m2,
        } => {
            let rho = isa_density(alt_m)?;
            let lift = lift_force(cl, rho, speed_mps, area_m2)?;
            println!("density: {rho:.4} kg/m3");
            println!("lift: {lift:.1} N / {:.1} lbf", lift / NEWTONS_PER_LBF);
        }
        AeroCommand::Minspeed {
            cl,
            alt_m,
            area_m2,
            mass_kg,
        } => {
            let rho = isa_density(alt_m)?;
            let airframe = Airframe {
                wing_area_m2: area_m2,
                lift_coefficient: cl,
                empty_mass_kg: mass_kg,
                payload_mass_kg: 0.0,
            };
            let v = min_sustaining_speed(&airframe, rho)?;
            println!("density: {rho:.4} kg/m3");
            println!(
                "min speed: {v:.2} m/s / {:.2} kn (mass {mass_kg} kg / {:.1} lb)",
                knots_from_mps(v),
                mass_kg / KG_PER_LB
            );
        }
        AeroCommand::TurnRadius { speed_mps, bank_deg } => {
            let ft = turn_radius_ft(knots_from_mps(speed_mps), bank_deg)?;
            let m = turn_radius(speed_mps, bank_deg)?;
            println!("{ft:.2} ft / {m:.2} m");
        }
    }
    Ok(())
}

fn run_scenario(file: &Path, out: Option<&Path>, strict: bool) -> Result<(), Failure> {
    let scenario = Scenario::load(file)?;
    let violations = scenario::validate(&scenario);
    for v in &violations {
        eprintln!("violation: {v}");
    }
    if strict && !violations.is_empty() {
        return Err(Failure::Strict(violations.len()));
    }
    let tables = Tables::from_env()?;
    let samples = scenario::simulate_with(&scenario, &PathIntegrator::new(&tables))?;
    let mut ids: Vec<&str> = scenario.links.iter().map(|l| l.id.as_str()).collect();
    ids.sort_unstable();
    for id in ids {
        if let Some(dev) = scenario::max_los_deviation_deg(&samples, id) {
            eprintln!("link {id}: max line-of-sight deviation {dev:.4} deg");
        }
    }
    let mut w = output(out)?;
    scenario::write_csv(&samples, &mut w)?;
    w.flush()?;
    Ok(())
}

fn isa(alt_m: f64) -> Result<(), Failure> {
    let s = isa_sample(alt_m, STANDARD_WATER_VAPOR_G_M3)?;
    println!("altitude: {alt_m} m / {:.1} ft", feet_from_m(alt_m));
    println!("temperature: {:.2} K", s.temperature_k);
    println!("pressure: {:.2} hPa", s.pressure_hpa());
    println!("density: {:.4} kg/m3", s.density_kg_m3);
    println!("water vapour: {:.4} g/m3", s.water_vapor_density_g_m3);
    Ok(())
}

fn laser(power_w: f64, distance_m: f64, visibility: VisibilityClass, efficiency: f64) -> Result<(), Failure> {
    let p = laser_delivery(power_w, distance_m, visibility, efficiency)?;
    println!("delivered: {p:.6e} W");
    Ok(())
}
