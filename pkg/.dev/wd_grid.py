"""Dev: weight-decay grid on validation, seed 0, both models."""
import json, time
from dropmax import training
from dropmax.training import TrainConfig

results = {}
for model in ("softmax", "dropmax"):
    for wd in (0.0, 1e-5, 1e-4, 1e-3):
        cfg = TrainConfig(model=model, dataset="mnist", data_dir="data/mnist",
                          train_size=1000, val_size=5000, batch_size=50,
                          epochs=400, lr=1e-4, weight_decay=wd,
                          hidden=(512, 512), patience=50, seed=0)
        t0 = time.monotonic()
        r = training.train(cfg)
        dt = time.monotonic() - t0
        key = f"{model}_wd{wd:g}"
        results[key] = dict(val=r.val_error, test=r.test_error,
                            best_epoch=r.best_epoch, stopped=r.stopped_epoch,
                            minutes=round(dt / 60, 2))
        print(f"{key}: val {r.val_error:.2f} test {r.test_error:.2f} "
              f"best@{r.best_epoch} stop@{r.stopped_epoch} {dt/60:.1f}min", flush=True)
        with open(".dev/wd_grid.json", "w") as f:
            json.dump(results, f, indent=2)
print("DONE")
