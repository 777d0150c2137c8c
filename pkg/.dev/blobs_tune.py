"""Dev: tune overlap/epochs for the confusable-pair retain property."""
import numpy as np
from dropmax import training
from dropmax.training import TrainConfig

def partner_fraction(result, a=0, b=1):
    _, _, test_ds = training.load_datasets(result.config)
    retain = result.model.retain_values(test_ds.images)
    frac = {}
    for cls, partner in ((a, b), (b, a)):
        rows = retain[test_ds.labels == cls]
        off = np.delete(np.arange(test_ds.num_classes), cls)
        choice = off[np.argmax(rows[:, off], axis=1)]
        frac[cls] = float(np.mean(choice == partner))
    return frac

for overlap in (0.5, 0.6, 0.7):
    for epochs, lr in ((60, 0.01), (120, 0.01)):
        fr = []
        for seed in range(3):
            cfg = TrainConfig(model="dropmax", dataset="blobs", epochs=epochs,
                              batch_size=50, lr=lr, hidden=(32,),
                              blob_classes=6, blob_per_class=150, blob_dim=8,
                              blob_overlap=overlap, patience=0, seed=seed)
            r = training.train(cfg)
            f = partner_fraction(r)
            fr.append(f)
        mean0 = np.mean([f[0] for f in fr]); mean1 = np.mean([f[1] for f in fr])
        errs = "n/a"
        print(f"overlap={overlap} epochs={epochs} lr={lr}: "
              f"class0->1 {mean0:.2f} class1->0 {mean1:.2f} per-seed {[(round(f[0],2), round(f[1],2)) for f in fr]}", flush=True)
