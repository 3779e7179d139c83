//! Command implementations.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use phonon_casimir::closedforms::{self, ClosedFormSet};
use phonon_casimir::lifshitz::{
    energy_m_quantum, energy_perfect_reflector, energy_total, round_trip_det_routes, EnergyBreakdown,
    LayerStack,
};
use phonon_casimir::materials::{sound_speeds, ElasticMaterial, Permittivity, SpeedConvention};
use phonon_casimir::scattering::SpectralPoint;

use crate::args::{MaterialsAction, MaterialsArgs, PointArgs, SweepArgs};
use crate::materials_io::{load_materials, merged_database, resolve};
use crate::quantity::{parse_list, Quantity};
use crate::Exit;

fn fail_usage(msg: &str) -> Exit {
    eprintln!("error: {msg}");
    Exit::Usage
}

fn fail_numeric(msg: &str) -> Exit {
    eprintln!("error: {msg}");
    Exit::Numerical
}

fn write_output(dest: &str, content: &str) -> std::io::Result<()> {
    if dest == "-" {
        std::io::stdout().write_all(content.as_bytes())
    } else {
        std::fs::write(Path::new(dest), content)
    }
}

fn load_extra(path: &Option<std::path::PathBuf>) -> Result<Vec<ElasticMaterial>, Exit> {
    match path {
        None => Ok(Vec::new()),
        Some(p) => load_materials(p).map_err(|e| fail_usage(&e.to_string())),
    }
}

fn fmt_value(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:e}")
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "nan".into(), fmt_value)
}

// ---------------------------------------------------------------- materials

pub fn cmd_materials(args: &MaterialsArgs) -> Exit {
    match &args.action {
        MaterialsAction::List { materials_file } => {
            let extra = match load_extra(materials_file) {
                Ok(v) => v,
                Err(e) => return e,
            };
            let db = merged_database(&extra);
            println!(
                "{:<10} {:>10} {:>12} {:>9} {:>9} {:>7} {:>12} {:>12} {:>11}",
                "name",
                "rho_kg_m3",
                "lambda_GPa",
                "mu_GPa",
                "c11_GPa",
                "eps0",
                "c_l_lame_ms",
                "c_l_c11_ms",
                "c_t_ms"
            );
            for m in &db {
                let lame = sound_speeds(m, SpeedConvention::Lame).expect("validated");
                let c11 = sound_speeds(m, SpeedConvention::C11).ok();
                let eps = match m.eps0 {
                    Some(Permittivity::Dielectric(e)) => format!("{e}"),
                    Some(Permittivity::Conductor) => "inf".into(),
                    None => "-".into(),
                };
                println!(
                    "{:<10} {:>10} {:>12} {:>9} {:>9} {:>7} {:>12.2} {:>12} {:>11.2}",
                    m.name,
                    m.rho,
                    m.lambda / 1.0e9,
                    m.mu / 1.0e9,
                    m.c11.map_or_else(|| "-".into(), |c| format!("{}", c / 1.0e9)),
                    eps,
                    lame.c_l,
                    c11.map_or_else(|| "-".into(), |s| format!("{:.2}", s.c_l)),
                    lame.c_t,
                );
            }
            Exit::Ok
        }
        MaterialsAction::Show { name, materials_file } => {
            let extra = match load_extra(materials_file) {
                Ok(v) => v,
                Err(e) => return e,
            };
            match resolve(name, &extra) {
                None => fail_usage(&format!("unknown material '{name}'")),
                Some(m) => {
                    println!("name        {}", m.name);
                    println!("rho         {} kg/m^3", m.rho);
                    println!("lambda      {} Pa", m.lambda);
                    println!("mu          {} Pa", m.mu);
                    match m.c11 {
                        Some(c) => println!("c11         {c} Pa"),
                        None => println!("c11         (absent)"),
                    }
                    match m.eps0 {
                        Some(Permittivity::Dielectric(e)) => println!("eps0        {e}"),
                        Some(Permittivity::Conductor) => println!("eps0        inf (conductor)"),
                        None => println!("eps0        (absent)"),
                    }
                    let lame = sound_speeds(&m, SpeedConvention::Lame).expect("validated");
                    println!("c_l (lame)  {:.2} m/s", lame.c_l);
                    if let Ok(c11) = sound_speeds(&m, SpeedConvention::C11) {
                        println!("c_l (c11)   {:.2} m/s", c11.c_l);
                    }
                    println!("c_t         {:.2} m/s", lame.c_t);
                    println!("E_young     {:.6e} Pa", m.young_modulus());
                    Exit::Ok
                }
            }
        }
        MaterialsAction::Validate { file } => match load_materials(file) {
            Ok(mats) => {
                for (i, m) in mats.iter().enumerate() {
                    println!("record {i} ('{}'): ok", m.name);
                }
                println!("{} record(s) valid", mats.len());
                Exit::Ok
            }
            Err(e) => fail_usage(&e.to_string()),
        },
    }
}

// -------------------------------------------------------------------- point

fn build_stack(
    plate: &str,
    gap: &str,
    d: f64,
    temp: f64,
    mode: SpeedConvention,
    extra: &[ElasticMaterial],
) -> Result<LayerStack, Exit> {
    let plate = resolve(plate, extra)
        .ok_or_else(|| fail_usage(&format!("unknown material '{plate}'")))?;
    let gap =
        resolve(gap, extra).ok_or_else(|| fail_usage(&format!("unknown material '{gap}'")))?;
    LayerStack::new(plate, gap, d, temp, mode).map_err(|e| fail_usage(&e.to_string()))
}

fn point_report(stack: &LayerStack, b: &EnergyBreakdown) -> String {
    let cf = &b.asymptotics;
    let mut out = String::new();
    let mut line = |k: &str, v: String| {
        let _ = writeln!(out, "{k:<12} {v}");
    };
    line("plate", stack.plate.name.clone());
    line("gap", stack.gap.name.clone());
    line("d", format!("{} m", fmt_value(stack.d)));
    line("T", format!("{} K", fmt_value(stack.temperature)));
    line(
        "speeds",
        match stack.mode {
            SpeedConvention::Lame => "lame".into(),
            SpeedConvention::C11 => "c11".into(),
        },
    );
    line("e_m", format!("{} J/m^2", fmt_value(b.e_m)));
    line("e_ln", format!("{} J/m^2", fmt_value(b.e_ln)));
    line("e_total", format!("{} J/m^2", fmt_value(b.e_total)));
    line("m_terms", format!("{}", b.m_terms));
    line("ln_terms", format!("{}", b.ln_terms));
    line("m_path", if b.m_quantum_path { "quantum".into() } else { "thermal".into() });
    line("ln_path", if b.ln_quantum_path { "quantum".into() } else { "thermal".into() });
    line("m_error", format!("{} J/m^2", fmt_value(b.m_error)));
    line("ln_error", format!("{} J/m^2", fmt_value(b.ln_error)));
    line("e_pr", format!("{} J/m^2", fmt_value(cf.e_pr)));
    line("b_constant", fmt_value(cf.b));
    line("e_ln_qm", format!("{} J/m^2 (diagnostic, never summed)", fmt_value(cf.e_ln_qm)));
    line("e_ln_T", format!("{} J/m^2", fmt_value(cf.e_ln_t)));
    line("e_m_qm", format!("{} J/m^2", fmt_value(cf.e_m_qm)));
    line("e_m_T", format!("{} J/m^2", fmt_value(cf.e_m_t)));
    line("e_em_qm", format!("{} J/m^2", fmt_opt(cf.e_em_qm)));
    line("e_em_T", format!("{} J/m^2", fmt_opt(cf.e_em_t)));
    line("gamma", fmt_opt(cf.gamma));
    line("ratio", fmt_opt(cf.ratio_estimate));
    line(
        "pressure",
        format!(
            "{} Pa",
            fmt_value(closedforms::casimir_pressure(
                &stack.gap,
                &stack.plate,
                stack.d,
                stack.temperature
            ))
        ),
    );
    out
}

fn point_checks(stack: &LayerStack, cf: &ClosedFormSet) -> Result<String, Exit> {
    let mut out = String::new();
    let mut worst: f64 = 0.0;
    let mut check = |name: &str, dev: f64| {
        worst = worst.max(dev);
        let verdict = if dev < 1e-2 { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "check {name:<24} {dev:.3e} {verdict}");
    };

    let numeric_m_qm = energy_m_quantum(stack)
        .map_err(|e| fail_numeric(&format!("--check: {e}")))?;
    check("e_m_qm_vs_closed", (numeric_m_qm / cf.e_m_qm - 1.0).abs());

    let numeric_pr = energy_perfect_reflector(&stack.gap, stack.d, stack.mode)
        .map_err(|e| fail_numeric(&format!("--check: {e}")))?;
    check("e_pr_vs_closed", (numeric_pr / cf.e_pr - 1.0).abs());

    // round-trip determinant block consistency at a representative point
    let t_probe = if stack.temperature > 0.0 { stack.temperature } else { 300.0 };
    let point = SpectralPoint::matsubara(
        1,
        t_probe,
        1.0 / stack.d,
        &stack.gap,
        &stack.plate,
        stack.mode,
    )
    .map_err(|e| fail_numeric(&format!("--check: {e}")))?;
    let (full, block) = round_trip_det_routes(stack, &point)
        .map_err(|e| fail_numeric(&format!("--check: {e}")))?;
    let scale = full.abs().max(block.abs()).max(f64::MIN_POSITIVE);
    check("det_block_factorisation", (full - block).abs() / scale);

    // pressure against a central finite difference of the thermal energy
    if stack.temperature > 0.0 {
        let h = stack.d * 1e-5;
        let fd = -(closedforms::e_m_thermal(&stack.gap, &stack.plate, stack.d + h, stack.temperature)
            - closedforms::e_m_thermal(&stack.gap, &stack.plate, stack.d - h, stack.temperature))
            / (2.0 * h);
        let p = closedforms::casimir_pressure(&stack.gap, &stack.plate, stack.d, stack.temperature);
        if p != 0.0 {
            check("pressure_vs_derivative", (p / fd - 1.0).abs());
        }
    }

    if worst >= 1e-2 {
        print!("{out}");
        return Err(fail_numeric("--check deviations exceeded 1e-2"));
    }
    Ok(out)
}

pub fn cmd_point(args: &PointArgs) -> Exit {
    let extra = match load_extra(&args.stack.materials_file) {
        Ok(v) => v,
        Err(e) => return e,
    };
    if !(args.d > 0.0) {
        return fail_usage("--d must be positive");
    }
    let stack = match build_stack(
        &args.stack.plate,
        &args.stack.gap,
        args.d,
        args.stack.temp,
        args.stack.speeds.into(),
        &extra,
    ) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let breakdown = match energy_total(&stack) {
        Ok(b) => b,
        Err(e) => return fail_numeric(&e.to_string()),
    };
    let mut report = point_report(&stack, &breakdown);
    if args.check {
        match point_checks(&stack, &breakdown.asymptotics) {
            Ok(lines) => report.push_str(&lines),
            Err(exit) => return exit,
        }
    }
    match write_output(&args.stack.output, &report) {
        Ok(()) => Exit::Ok,
        Err(e) => fail_usage(&format!("cannot write output: {e}")),
    }
}

// -------------------------------------------------------------------- sweep

struct RowSpec {
    d: f64,
    t: f64,
}

fn grid(args: &SweepArgs) -> Result<Vec<RowSpec>, Exit> {
    let ds: Vec<f64> = if let Some(d) = args.d {
        if !(d > 0.0) {
            return Err(fail_usage("--d must be positive"));
        }
        vec![d]
    } else {
        let (d_min, d_max, points) = match (args.d_min, args.d_max, args.points) {
            (Some(a), Some(b), Some(n)) => (a, b, n),
            _ => {
                return Err(fail_usage(
                    "either --d or all of --d-min/--d-max/--points are required",
                ))
            }
        };
        if !(d_min > 0.0) || !(d_max >= d_min) {
            return Err(fail_usage("need 0 < d-min <= d-max"));
        }
        if !(2..=1_000_000).contains(&points) {
            return Err(fail_usage("--points must lie in [2, 1e6]"));
        }
        (0..points)
            .map(|i| {
                let f = i as f64 / (points - 1) as f64;
                if args.log {
                    d_min * (d_max / d_min).powf(f)
                } else {
                    d_min + (d_max - d_min) * f
                }
            })
            .collect()
    };
    let ts: Vec<f64> = match args.temp_max {
        None => vec![args.stack.temp],
        Some(t_max) => {
            let n = args.temp_points.max(2);
            (0..n)
                .map(|i| {
                    args.stack.temp
                        + (t_max - args.stack.temp) * i as f64 / (n - 1) as f64
                })
                .collect()
        }
    };
    let mut rows = Vec::with_capacity(ds.len() * ts.len());
    for &d in &ds {
        for &t in &ts {
            rows.push(RowSpec { d, t });
        }
    }
    Ok(rows)
}

fn eval_cell(
    q: Quantity,
    stack: &LayerStack,
    breakdown: Option<&EnergyBreakdown>,
    closed: &ClosedFormSet,
    young_bulk: f64,
) -> String {
    match q {
        Quantity::EM => fmt_value(breakdown.expect("requested numeric").e_m),
        Quantity::ELn => fmt_value(breakdown.expect("requested numeric").e_ln),
        Quantity::ETotal => fmt_value(breakdown.expect("requested numeric").e_total),
        Quantity::EPr => fmt_value(closed.e_pr),
        Quantity::ELnQm => fmt_value(closed.e_ln_qm),
        Quantity::ELnT => fmt_value(closed.e_ln_t),
        Quantity::EMQm => fmt_value(closed.e_m_qm),
        Quantity::EMT => fmt_value(closed.e_m_t),
        Quantity::EEmQm => fmt_opt(closed.e_em_qm),
        Quantity::EEmT => fmt_opt(closed.e_em_t),
        Quantity::Ratio => fmt_opt(closed.ratio_estimate),
        Quantity::Gamma => fmt_opt(closed.gamma),
        Quantity::Pressure => fmt_value(closedforms::casimir_pressure(
            &stack.gap,
            &stack.plate,
            stack.d,
            stack.temperature,
        )),
        Quantity::Young => fmt_value(closedforms::apparent_young_modulus(
            young_bulk,
            &stack.gap,
            &stack.plate,
            stack.d,
            stack.temperature,
        )),
    }
}

fn eval_row(
    row: &RowSpec,
    plate: &ElasticMaterial,
    gap: &ElasticMaterial,
    mode: SpeedConvention,
    quantities: &[Quantity],
    young_bulk: f64,
) -> (String, bool) {
    let needs_numeric = quantities.iter().any(|q| q.needs_numeric());
    let result = LayerStack::new(plate.clone(), gap.clone(), row.d, row.t, mode).and_then(
        |stack| {
            let breakdown = if needs_numeric {
                Some(energy_total(&stack)?)
            } else {
                None
            };
            let closed = match &breakdown {
                Some(b) => b.asymptotics,
                None => closedforms::closed_form_set(&stack)?,
            };
            let cells: Vec<String> = quantities
                .iter()
                .map(|&q| eval_cell(q, &stack, breakdown.as_ref(), &closed, young_bulk))
                .collect();
            Ok(cells)
        },
    );
    match result {
        Ok(cells) => (
            format!("{},{},{},ok", fmt_value(row.d), fmt_value(row.t), cells.join(",")),
            false,
        ),
        Err(e) => {
            let nan_cells = vec!["nan".to_string(); quantities.len()];
            (
                format!(
                    "{},{},{},error:{}",
                    fmt_value(row.d),
                    fmt_value(row.t),
                    nan_cells.join(","),
                    sanitize(&e.to_string())
                ),
                true,
            )
        }
    }
}

fn sanitize(msg: &str) -> String {
    msg.replace([',', '\n'], ";")
}

pub fn cmd_sweep(args: &SweepArgs) -> Exit {
    let extra = match load_extra(&args.stack.materials_file) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let quantities = match parse_list(&args.quantities) {
        Ok(q) => q,
        Err(e) => return fail_usage(&e),
    };
    let rows = match grid(args) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let plate = match resolve(&args.stack.plate, &extra) {
        Some(m) => m,
        None => return fail_usage(&format!("unknown material '{}'", args.stack.plate)),
    };
    let gap = match resolve(&args.stack.gap, &extra) {
        Some(m) => m,
        None => return fail_usage(&format!("unknown material '{}'", args.stack.gap)),
    };
    let mode: SpeedConvention = args.stack.speeds.into();
    // validate once up front so per-row errors are genuinely numerical
    if let Err(e) = LayerStack::new(plate.clone(), gap.clone(), rows[0].d, rows[0].t, mode) {
        return fail_usage(&e.to_string());
    }
    let young_bulk = args.young_bulk.unwrap_or_else(|| gap.young_modulus());

    let mut header = String::new();
    let _ = writeln!(header, "# phonon-casimir sweep");
    let _ = writeln!(header, "# plate: {}", plate.name);
    let _ = writeln!(header, "# gap: {}", gap.name);
    let _ = writeln!(
        header,
        "# speeds: {}",
        match mode {
            SpeedConvention::Lame => "lame",
            SpeedConvention::C11 => "c11",
        }
    );
    let _ = writeln!(header, "# d: m");
    let _ = writeln!(header, "# T: K");
    for q in &quantities {
        let _ = writeln!(header, "# {}: {}", q.name(), q.unit());
    }
    if quantities.contains(&Quantity::Young) {
        let _ = writeln!(header, "# young_bulk: {} Pa", fmt_value(young_bulk));
    }
    let _ = writeln!(header, "# status: ok | error:<kind>");
    let names: Vec<&str> = quantities.iter().map(|q| q.name()).collect();
    let _ = writeln!(header, "d,T,{},status", names.join(","));

    type RowResult = (String, bool);
    let jobs = args.jobs.clamp(1, 256) as usize;
    let mut lines: Vec<Option<RowResult>> = (0..rows.len()).map(|_| None).collect();
    if jobs <= 1 {
        for (i, row) in rows.iter().enumerate() {
            lines[i] = Some(eval_row(row, &plate, &gap, mode, &quantities, young_bulk));
        }
    } else {
        let chunk = rows.len().div_ceil(jobs);
        let slots: Vec<std::sync::Mutex<Vec<(usize, RowResult)>>> =
            (0..jobs).map(|_| std::sync::Mutex::new(Vec::new())).collect();
        std::thread::scope(|scope| {
            for (w, slot) in slots.iter().enumerate() {
                let rows = &rows;
                let plate = &plate;
                let gap = &gap;
                let quantities = &quantities;
                scope.spawn(move || {
                    let lo = w * chunk;
                    let hi = ((w + 1) * chunk).min(rows.len());
                    let mut local = Vec::with_capacity(hi.saturating_sub(lo));
                    for (offset, row) in rows[lo..hi].iter().enumerate() {
                        local.push((
                            lo + offset,
                            eval_row(row, plate, gap, mode, quantities, young_bulk),
                        ));
                    }
                    *slot.lock().unwrap() = local;
                });
            }
        });
        for slot in slots {
            for (i, line) in slot.into_inner().unwrap() {
                lines[i] = Some(line);
            }
        }
    }

    let mut body = header;
    let mut any_error = false;
    for line in lines.into_iter().flatten() {
        any_error |= line.1;
        body.push_str(&line.0);
        body.push('\n');
    }
    if let Err(e) = write_output(&args.stack.output, &body) {
        return fail_usage(&format!("cannot write output: {e}"));
    }
    if any_error {
        Exit::Numerical
    } else {
        Exit::Ok
    }
}
