import init, { analyze, subadditivity, equivalence } from "./pkg/monadj_demo.js";

const $ = (id) => document.getElementById(id);

function monomial(e, vars) {
  const parts = e
    .map((k, i) => (k === 0 ? null : k === 1 ? vars[i] : `${vars[i]}^${k}`))
    .filter((p) => p !== null);
  return parts.length ? parts.join("*") : "1";
}

const list = (gens, vars) => gens.map((g) => monomial(g, vars)).join(", ");

function show(el, fn) {
  el.classList.remove("error");
  try {
    el.textContent = fn();
  } catch (err) {
    el.classList.add("error");
    el.textContent = String(err);
  }
}

function varNames() {
  return $("vars").value.split(/[\s,]+/).filter((s) => s.length > 0);
}

// Scales exponent space into the canvas with the origin bottom-left.
function frame(canvas, extent) {
  const pad = 28;
  const scale = (canvas.width - 2 * pad) / extent;
  return {
    pad,
    extent,
    x: (u) => pad + u * scale,
    y: (v) => canvas.height - pad - v * scale,
    toU: (px) => (px - pad) / scale,
    toV: (py) => (canvas.height - pad - py) / scale,
  };
}

function shadePolyhedron(ctx, canvas, f, facets, n) {
  const img = ctx.getImageData(0, 0, canvas.width, canvas.height);
  const hs = facets.map((h) => ({ a: Number(h.normal[0]), b: Number(h.normal[1]), c: n * Number(h.offset) }));
  for (let py = 0; py < canvas.height; py++) {
    for (let px = 0; px < canvas.width; px++) {
      const u = f.toU(px + 0.5);
      const v = f.toV(py + 0.5);
      if (u < 0 || v < 0 || u > f.extent || v > f.extent) continue;
      if (hs.every((h) => h.a * u + h.b * v >= h.c)) {
        const k = 4 * (py * canvas.width + px);
        img.data[k] = 0xcf;
        img.data[k + 1] = 0xe3;
        img.data[k + 2] = 0xf7;
        img.data[k + 3] = 0xff;
      }
    }
  }
  ctx.putImageData(img, 0, 0);
}

// Outline of the union of quadrants above the generators.
function staircase(ctx, f, gens, color, width) {
  const pts = [...gens].sort((p, q) => p[0] - q[0]);
  ctx.strokeStyle = color;
  ctx.lineWidth = width;
  ctx.beginPath();
  ctx.moveTo(f.x(pts[0][0]), f.y(f.extent));
  pts.forEach((p, i) => {
    ctx.lineTo(f.x(p[0]), f.y(p[1]));
    const next = i + 1 < pts.length ? pts[i + 1][0] : f.extent;
    ctx.lineTo(f.x(next), f.y(p[1]));
  });
  ctx.stroke();
}

function dots(ctx, f, gens, color, radius) {
  ctx.fillStyle = color;
  for (const [u, v] of gens) {
    ctx.beginPath();
    ctx.arc(f.x(u), f.y(v), radius, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function draw(result) {
  const canvas = $("plot");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (result.variables.length !== 2) {
    ctx.fillStyle = "#666";
    ctx.fillText("the picture needs exactly two variables", 20, 30);
    return;
  }
  const n = result.power;
  const all = [...result.closure, ...result.adjoint];
  const extent = Math.max(4, ...all.flat()) + 2;
  const f = frame(canvas, extent);

  shadePolyhedron(ctx, canvas, f, result.facets, n);

  ctx.strokeStyle = "#e4e4e4";
  ctx.lineWidth = 1;
  ctx.fillStyle = "#888";
  ctx.font = "10px sans-serif";
  const step = extent > 30 ? 5 : 1;
  for (let t = 0; t <= extent; t += step) {
    ctx.beginPath();
    ctx.moveTo(f.x(t), f.y(0));
    ctx.lineTo(f.x(t), f.y(extent));
    ctx.moveTo(f.x(0), f.y(t));
    ctx.lineTo(f.x(extent), f.y(t));
    ctx.stroke();
    ctx.fillText(String(t), f.x(t) - 3, f.y(0) + 14);
    ctx.fillText(String(t), f.x(0) - 20, f.y(t) + 3);
  }

  staircase(ctx, f, result.adjoint, "#c0392b", 2);
  staircase(ctx, f, result.closure, "#1f5fa8", 2);
  dots(ctx, f, result.adjoint, "#c0392b", 3.5);
  dots(ctx, f, result.closure, "#1f5fa8", 3.5);
  if (n === 1) dots(ctx, f, result.generators, "#222", 2.5);
}

function runAnalyze() {
  show($("analysis"), () => {
    const vars = $("vars").value;
    const n = Number($("power").value);
    const r = JSON.parse(analyze(vars, $("gens").value, n));
    draw(r);
    const v = r.variables;
    const facets = r.facets.map((h) => `  (${h.normal.join(", ")}) . e >= ${h.offset}`);
    const rees = r.rees.map(
      (x) => `  weights (${x.weights.join(", ")})  v(I) = ${x.value}  v(jacobian) = ${x.jacobian_value}`,
    );
    return [
      `I = (${list(r.generators, v)})`,
      "",
      "facets of NP(I):",
      ...facets,
      "",
      "Rees valuations:",
      ...rees,
      "",
      `ic(I^${n}) = (${list(r.closure, v)})`,
      `adj(I^${n}) = (${list(r.adjoint, v)})`,
    ].join("\n");
  });
}

function runSubadditivity() {
  show($("subadd-out"), () => {
    const v = varNames();
    const r = JSON.parse(subadditivity($("vars").value, $("sub-a").value, $("sub-b").value));
    const rows = r.witnesses.map(
      (w) =>
        `  ${monomial(w.generator, v)} = ${monomial(w.factor_i, v)} * ${monomial(w.factor_j, v)}` +
        `    b = (${w.b.join(", ")})  c = (${w.c.join(", ")})`,
    );
    return [
      `holds: ${r.holds}`,
      `adj(I) = (${list(r.adjoint_i, v)})`,
      `adj(J) = (${list(r.adjoint_j, v)})`,
      `adj(IJ) = (${list(r.adjoint_of_product, v)})`,
      `adj(I) adj(J) = (${list(r.product_of_adjoints, v)})`,
      "",
      "factorizations:",
      ...rows,
    ].join("\n");
  });
}

function runEquivalence() {
  show($("equiv-out"), () => {
    const r = JSON.parse(equivalence($("vars").value, $("eq-a").value, $("eq-b").value));
    return r.equivalent ? `equivalent: ic(I^${r.i}) = ic(J^${r.j})` : "not projectively equivalent";
  });
}

await init();
$("analyze").addEventListener("click", runAnalyze);
$("subadd").addEventListener("click", runSubadditivity);
$("equiv").addEventListener("click", runEquivalence);
runAnalyze();
runSubadditivity();
runEquivalence();
