import init, {
  demo_document,
  operation_names,
  set_operation,
  alpha_analysis,
  separation_sweep,
} from "../pkg/dfuzzy_web.js";

const $ = (id) => document.getElementById(id);

const COLORS = { a: "#2563ab", b: "#d97706", result: "#15803d", cut: "#be185d" };

let docText = "";
let setNames = [];

function parseSetNames(text) {
  const parsed = JSON.parse(text);
  return Object.keys(parsed.sets || {}).sort();
}

function fillSelect(select, names, preferred) {
  select.innerHTML = "";
  for (const name of names) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    select.appendChild(option);
  }
  if (preferred && names.includes(preferred)) select.value = preferred;
}

// --- plotting helpers ------------------------------------------------------

function setupPlot(canvas, xs, yMax = 1.05) {
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height;
  ctx.clearRect(0, 0, W, H);
  const pad = { left: 42, right: 14, top: 12, bottom: 26 };
  const xMin = Math.min(...xs), xMax = Math.max(...xs);
  const spanX = xMax - xMin || 1;
  const plot = {
    ctx, W, H, pad,
    x: (x) => pad.left + ((x - xMin) / spanX) * (W - pad.left - pad.right),
    y: (y) => H - pad.bottom - (y / yMax) * (H - pad.top - pad.bottom),
  };
  // axes and unit gridline
  ctx.strokeStyle = "#c9d1da";
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(pad.left, plot.y(0)); ctx.lineTo(W - pad.right, plot.y(0));
  ctx.moveTo(pad.left, plot.y(0)); ctx.lineTo(pad.left, pad.top);
  ctx.stroke();
  ctx.setLineDash([3, 4]);
  ctx.beginPath();
  ctx.moveTo(pad.left, plot.y(1)); ctx.lineTo(W - pad.right, plot.y(1));
  ctx.stroke();
  ctx.setLineDash([]);
  ctx.fillStyle = "#5a6674";
  ctx.font = "11px sans-serif";
  ctx.fillText("1", pad.left - 14, plot.y(1) + 4);
  ctx.fillText("0", pad.left - 14, plot.y(0) + 4);
  for (const x of xs) {
    ctx.fillText(String(x), plot.x(x) - 3, H - 8);
  }
  return plot;
}

function drawCurve(plot, xs, ys, color, dashed) {
  const { ctx } = plot;
  ctx.strokeStyle = color;
  ctx.lineWidth = 1.8;
  ctx.setLineDash(dashed ? [6, 5] : []);
  ctx.beginPath();
  xs.forEach((x, i) => {
    const px = plot.x(x), py = plot.y(ys[i]);
    if (i === 0) ctx.moveTo(px, py); else ctx.lineTo(px, py);
  });
  ctx.stroke();
  ctx.setLineDash([]);
  ctx.fillStyle = color;
  xs.forEach((x, i) => {
    ctx.beginPath();
    ctx.arc(plot.x(x), plot.y(ys[i]), 2.6, 0, Math.PI * 2);
    ctx.fill();
  });
}

function drawCurvePair(plot, points, color) {
  drawCurve(plot, points.xs, points.e1, color, false);
  drawCurve(plot, points.xs, points.e2, color, true);
}

function legend(plot, entries) {
  const { ctx, pad } = plot;
  let x = pad.left + 8;
  ctx.font = "11px sans-serif";
  for (const [label, color] of entries) {
    ctx.fillStyle = color;
    ctx.fillRect(x, pad.top, 10, 10);
    ctx.fillStyle = "#1c2530";
    ctx.fillText(label, x + 14, pad.top + 9);
    x += 14 + ctx.measureText(label).width + 16;
  }
}

function showError(reportEl, message) {
  reportEl.innerHTML = `<span class="error">${message}</span>`;
}

// --- panel 1: set operations ----------------------------------------------

function refreshOps() {
  const op = $("op-select").value;
  $("lambda-wrap").style.display = op === "convex-combination" ? "flex" : "none";
  const lambda = Number($("lambda").value);
  $("lambda-value").textContent = lambda.toFixed(2);
  const response = JSON.parse(
    set_operation(docText, op, $("op-a").value, $("op-b").value, lambda)
  );
  const report = $("op-report");
  if (response.error) return showError(report, response.error);
  const plot = setupPlot($("op-canvas"), response.a.xs);
  drawCurvePair(plot, response.a, COLORS.a);
  drawCurvePair(plot, response.b, COLORS.b);
  drawCurvePair(plot, response.result, COLORS.result);
  legend(plot, [["A", COLORS.a], ["B", COLORS.b], [op, COLORS.result]]);
  const fallback = response.incomparable_points.length
    ? `lattice fallback on incomparable grades at points ${response.incomparable_points.join(", ")}`
    : "all pointwise grades comparable: lattice and strict mode agree";
  report.textContent = fallback;
}

// --- panel 2: alpha-cuts ----------------------------------------------------

function refreshAlpha() {
  const au = Number($("alpha-u").value);
  const av = Number($("alpha-v").value);
  $("alpha-u-value").textContent = au.toFixed(2);
  $("alpha-v-value").textContent = av.toFixed(2);
  const response = JSON.parse(alpha_analysis(docText, $("alpha-set").value, au, av));
  const report = $("alpha-report");
  if (response.error) return showError(report, response.error);
  const plot = setupPlot($("alpha-canvas"), response.set.xs);
  drawCurvePair(plot, response.set, COLORS.a);
  // alpha levels
  plot.ctx.strokeStyle = COLORS.cut;
  plot.ctx.lineWidth = 1;
  for (const [level, dashed] of [[au, false], [av, true]]) {
    plot.ctx.setLineDash(dashed ? [6, 5] : [2, 3]);
    plot.ctx.beginPath();
    plot.ctx.moveTo(plot.x(Math.min(...response.set.xs)), plot.y(level));
    plot.ctx.lineTo(plot.x(Math.max(...response.set.xs)), plot.y(level));
    plot.ctx.stroke();
  }
  plot.ctx.setLineDash([]);
  // highlight cut members along the baseline
  plot.ctx.fillStyle = COLORS.cut;
  for (const index of response.cut) {
    const x = response.set.xs[index];
    plot.ctx.fillRect(plot.x(x) - 4, plot.y(0) - 3, 8, 6);
  }
  legend(plot, [["membership", COLORS.a], ["alpha / cut", COLORS.cut]]);
  const lines = [
    `cut at ${au.toFixed(2)}e1+${av.toFixed(2)}e2: {${response.cut.join(", ")}}`,
    `convex by cuts: ${response.convex_by_cuts}   pointwise: ${response.convex_pointwise}   strongly: ${response.strongly_convex}`,
    `supremum (${response.supremum[0].toFixed(2)}, ${response.supremum[1].toFixed(2)})` +
      (response.supremum_attained ? ` attained, core {${response.core.join(", ")}}` : ", not attained at a single point"),
    `candidate alphas: ${response.candidate_alphas.length}`,
  ];
  if (response.witness) {
    const w = response.witness;
    lines.push(
      `witness: segment ${w.endpoints[0]} -- ${w.endpoints[1]} fails at ${w.interior}` +
        (w.alpha ? ` (alpha ${w.alpha})` : "")
    );
  }
  report.textContent = lines.join("\n");
}

// --- panel 3: separation ----------------------------------------------------

function refreshSeparation() {
  const response = JSON.parse(
    separation_sweep(docText, $("sep-a").value, $("sep-b").value, 0)
  );
  const report = $("sep-report");
  if (response.error) return showError(report, response.error);
  const thresholds = response.samples.map((s) => s.threshold);
  const xs = [...response.a.xs, ...thresholds];
  const plot = setupPlot($("sep-canvas"), xs);
  drawCurvePair(plot, response.a, COLORS.a);
  drawCurvePair(plot, response.b, COLORS.b);
  drawCurve(plot, thresholds, response.samples.map((s) => s.degree_e1), COLORS.result, false);
  drawCurve(plot, thresholds, response.samples.map((s) => s.degree_e2), COLORS.result, true);
  // optimal hyperplanes
  plot.ctx.strokeStyle = COLORS.cut;
  plot.ctx.setLineDash([4, 4]);
  for (const t of [response.best_threshold_e1, response.best_threshold_e2]) {
    plot.ctx.beginPath();
    plot.ctx.moveTo(plot.x(t), plot.y(0));
    plot.ctx.lineTo(plot.x(t), plot.y(1.02));
    plot.ctx.stroke();
  }
  plot.ctx.setLineDash([]);
  legend(plot, [["A", COLORS.a], ["B", COLORS.b], ["degree D(H)", COLORS.result], ["optimum", COLORS.cut]]);
  report.textContent = [
    `best degree (${response.best_degree[0].toFixed(4)}, ${response.best_degree[1].toFixed(4)})` +
      ` at thresholds ${response.best_threshold_e1} / ${response.best_threshold_e2}`,
    `intersection supremum M = (${response.intersection_max[0].toFixed(4)}, ${response.intersection_max[1].toFixed(4)})`,
    `separation theorem D = 1 - M: ${response.theorem_holds ? "holds" : "does not apply (operands not convex on this axis?)"}`,
  ].join("\n");
}

// --- wiring -----------------------------------------------------------------

function refreshAll() {
  refreshOps();
  refreshAlpha();
  refreshSeparation();
}

function applyDocument() {
  const status = $("doc-status");
  try {
    const names = parseSetNames($("doc").value);
    if (names.length < 2) throw new Error("document needs at least two sets");
    docText = $("doc").value;
    setNames = names;
    status.textContent = `${names.length} sets loaded`;
    status.className = "";
  } catch (e) {
    status.textContent = `invalid document: ${e.message}`;
    status.className = "error";
    return;
  }
  fillSelect($("op-a"), setNames, "A");
  fillSelect($("op-b"), setNames, "B");
  fillSelect($("alpha-set"), setNames, "A");
  fillSelect($("sep-a"), setNames, "A");
  fillSelect($("sep-b"), setNames, "B");
  refreshAll();
}

async function main() {
  await init();
  fillSelect($("op-select"), JSON.parse(operation_names()));
  $("doc").value = demo_document();
  $("apply").addEventListener("click", applyDocument);
  for (const id of ["op-select", "op-a", "op-b"]) {
    $(id).addEventListener("change", refreshOps);
  }
  $("lambda").addEventListener("input", refreshOps);
  $("alpha-set").addEventListener("change", refreshAlpha);
  $("alpha-u").addEventListener("input", refreshAlpha);
  $("alpha-v").addEventListener("input", refreshAlpha);
  $("sep-a").addEventListener("change", refreshSeparation);
  $("sep-b").addEventListener("change", refreshSeparation);
  applyDocument();
}

main();
